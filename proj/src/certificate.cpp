#include "modjoin/certificate.hpp"

#include "modjoin/divisional.hpp"
#include "modjoin/errors.hpp"
#include "modjoin/modularity.hpp"

namespace modjoin {

std::string_view cert_kind_name(CertKind k) noexcept {
  switch (k) {
    case CertKind::Empty: return "empty";
    case CertKind::ModularCoatom: return "modular-coatom";
    case CertKind::ModularJoin: return "modular-join";
    case CertKind::Flag: return "flag";
    case CertKind::SupersolvableChain: return "supersolvable-chain";
  }
  return "unknown";
}

CertKind cert_kind_from_name(std::string_view name) {
  for (auto k : {CertKind::Empty, CertKind::ModularCoatom, CertKind::ModularJoin, CertKind::Flag,
                 CertKind::SupersolvableChain}) {
    if (cert_kind_name(k) == name) return k;
  }
  throw Error(Errc::InvalidInput, "unknown certificate kind '" + std::string(name) + "'");
}

std::size_t certificate_size(const Certificate& c) {
  std::size_t n = 1;
  for (const auto& ch : c.children) n += certificate_size(ch);
  return n;
}

namespace {

using Index = FlatLattice::Index;

struct Failure {
  std::string message;
};

Index flat_index(const FlatLattice& l, const Subset& s, const char* what) {
  if (s.ground_size() != l.matroid().size()) throw Failure{std::string(what) + " has the wrong ground set"};
  auto i = l.find(s.bits());
  if (!i) throw Failure{std::string(what) + " " + s.to_string() + " is not a flat"};
  return *i;
}

void expect(bool cond, const std::string& message) {
  if (!cond) throw Failure{message};
}

void check_chain(const FlatLattice& l, Index top, const std::vector<Subset>& flats) {
  expect(flats.size() == static_cast<std::size_t>(l.rank_of(top)) + 1, "chain length differs from rank + 1");
  expect(flats.front().empty(), "chain does not start at the empty flat");
  expect(flats.back() == l.flat(top).atoms, "chain does not end at the subject");
  for (std::size_t i = 0; i < flats.size(); ++i) {
    Index f = flat_index(l, flats[i], "chain member");
    expect(l.rank_of(f) == static_cast<int>(i), "chain member " + std::to_string(i) + " has the wrong rank");
    if (i > 0) expect(flats[i - 1].is_subset_of(flats[i]), "chain is not increasing at " + std::to_string(i));
  }
}

void verify_node(const FlatLattice& l, const Certificate& c, std::string& path) {
  const Index top = flat_index(l, c.subject, "subject");
  switch (c.kind) {
    case CertKind::Empty:
      expect(c.subject.empty(), "empty node on a nonempty subject");
      expect(c.flats.empty() && c.children.empty(), "empty node carries data");
      return;
    case CertKind::ModularCoatom: {
      expect(c.flats.size() == 1 && c.children.size() == 1, "modular-coatom node needs one flat and one child");
      const Index x = flat_index(l, c.flats[0], "coatom");
      expect(l.leq(x, top) && l.rank_of(x) + 1 == l.rank_of(top), "flat is not a coatom of the subject");
      expect(is_modular_in(l, x, top), "coatom is not modular");
      expect(c.children[0].subject == c.flats[0], "child subject differs from the coatom");
      break;
    }
    case CertKind::ModularJoin: {
      expect(c.flats.size() == 3 && c.children.size() == 2, "modular-join node needs three flats and two children");
      const Index e1 = flat_index(l, c.flats[0], "E1");
      const Index e2 = flat_index(l, c.flats[1], "E2");
      const Index x = flat_index(l, c.flats[2], "X");
      expect(e1 != top && e2 != top && l.leq(e1, top) && l.leq(e2, top), "E1 and E2 must be proper subflats");
      expect((l.mask(e1) | l.mask(e2)) == l.mask(top), "E1 and E2 do not cover the subject");
      expect((l.mask(e1) & l.mask(e2)) == l.mask(x), "X is not E1 ∩ E2");
      expect(is_modular_in(l, e1, top), "E1 is not modular");
      expect(is_modular_in(l, e2, top), "E2 is not modular");
      expect(is_round_within(l, x), "X is not round");
      expect(c.children[0].subject == c.flats[0] && c.children[1].subject == c.flats[1],
             "child subjects differ from E1, E2");
      break;
    }
    case CertKind::SupersolvableChain: {
      expect(c.children.empty(), "chain node has children");
      check_chain(l, top, c.flats);
      for (const auto& f : c.flats) {
        expect(is_modular_in(l, l.index_of(f), top), "chain flat " + f.to_string() + " is not modular");
      }
      return;
    }
    case CertKind::Flag: {
      expect(c.children.empty(), "flag node has children");
      check_chain(l, top, c.flats);
      expect(c.roots.size() + 1 == c.flats.size(), "flag needs one root per step");
      for (std::size_t i = 0; i + 1 < c.flats.size(); ++i) {
        const auto hi = interval_charpoly(l, l.index_of(c.flats[i]), top);
        const auto lo = interval_charpoly(l, l.index_of(c.flats[i + 1]), top);
        auto q = poly_exact_div(hi, lo);
        expect(q.has_value(), "step " + std::to_string(i) + ": " + lo.to_string() + " does not divide " + hi.to_string());
        expect(*q == IntPolynomial::linear(c.roots[i]),
               "step " + std::to_string(i) + ": quotient " + q->to_string() + " differs from recorded root");
      }
      return;
    }
  }
  for (std::size_t i = 0; i < c.children.size(); ++i) {
    path += "/" + std::to_string(i);
    verify_node(l, c.children[i], path);
    path.resize(path.rfind('/'));
  }
}

}  // namespace

VerifyResult verify_certificate(const FlatLattice& l, const Certificate& c) {
  VerifyResult r;
  std::string path = "root";
  try {
    verify_node(l, c, path);
  } catch (const Failure& f) {
    r.ok = false;
    r.path = path;
    r.message = f.message;
  } catch (const Error& e) {
    r.ok = false;
    r.path = path;
    r.message = e.what();
  }
  return r;
}

}  // namespace modjoin
