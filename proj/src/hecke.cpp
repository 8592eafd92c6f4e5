// Hecke algebra arithmetic and Kazhdan-Lusztig polynomials.
#include "ht/hecke.h"

#include <sstream>
#include <stdexcept>

namespace ht {

namespace {

const LaurentPoly kZero;
const LaurentPoly kVminusVinv = LaurentPoly::v(1) - LaurentPoly::v(-1);

}  // namespace

// ---------------------------------------------------------------------------
// KLTable

KLTable::KLTable(std::shared_ptr<const WeylGroup> W, std::size_t max_order) : w_(std::move(W)) {
  const WeylGroup& G = *w_;
  std::size_t n = G.size();
  if (n > max_order)
    throw std::invalid_argument("KL table for a group of order " + std::to_string(n) + " exceeds the limit " +
                                std::to_string(max_order));
  p_.resize(n);
  mu_below_.resize(n);
  p_[0] = {LaurentPoly(1)};
  auto get = [&](int a, int b) -> const LaurentPoly& { return a <= b ? p_[b][a] : kZero; };
  for (std::size_t xi = 1; xi < n; ++xi) {
    int x = static_cast<int>(xi);
    int s = G.word(x)[0];
    int xp = G.lmul(s, x);
    std::vector<LaurentPoly> P(xi + 1);
    for (int y = 0; y <= x; ++y) {
      int sy = G.lmul(s, y);
      int c = G.length(sy) < G.length(y) ? 1 : 0;
      const LaurentPoly& a = get(sy, xp);
      const LaurentPoly& b = get(y, xp);
      if (!a.is_zero()) P[y].add_scaled(a, 1, 1 - c);
      if (!b.is_zero()) P[y].add_scaled(b, 1, c);
    }
    for (const auto& [z, m] : mu_below_[xp]) {
      if (G.length(G.lmul(s, z)) > G.length(z)) continue;
      int shift = (G.length(x) - G.length(z)) / 2;
      for (int y = 0; y <= z; ++y) {
        const LaurentPoly& pz = p_[z][y];
        if (!pz.is_zero()) P[y].add_scaled(pz, -m, shift);
      }
    }
    if (!(P[x] == LaurentPoly(1))) throw std::logic_error("KL recursion failed: P_{x,x} != 1");
    for (int y = 0; y < x; ++y) {
      int d = G.length(x) - G.length(y);
      if (d % 2 == 0 || P[y].is_zero()) continue;
      Integer m = P[y].coeff((d - 1) / 2);
      if (m != 0) mu_below_[x].emplace_back(y, static_cast<int>(m));
    }
    p_[xi] = std::move(P);
  }
}

const LaurentPoly& KLTable::P(int y, int x) const { return y <= x ? p_[x][y] : kZero; }

int KLTable::mu(int z, int x) const {
  for (const auto& [y, m] : mu_below_[x])
    if (y == z) return m;
  return 0;
}

LaurentPoly kl_polynomial(const KLTable& kl, int y, int x) {
  const LaurentPoly& p = kl.P(y, x);
  if (p.is_zero()) throw std::invalid_argument("kl_polynomial: y is not <= x in the Bruhat order");
  return p;
}

// ---------------------------------------------------------------------------
// HeckeElt

HeckeElt HeckeElt::T(std::shared_ptr<const TwistedWeylSystem> sys, ExtElt w, const LaurentPoly& a) {
  HeckeElt h(std::move(sys));
  h.add_term(w, a);
  return h;
}

LaurentPoly HeckeElt::coeff(ExtElt w) const {
  auto it = parts_.find(w.k);
  if (it == parts_.end()) return {};
  return it->second[w.w];
}

void HeckeElt::add_term(ExtElt w, const LaurentPoly& a) {
  if (a.is_zero()) return;
  int k = ((w.k % sys_->c()) + sys_->c()) % sys_->c();
  auto& part = parts_[k];
  if (part.empty()) part.resize(sys_->W().size());
  part[w.w] += a;
}

std::vector<std::pair<ExtElt, LaurentPoly>> HeckeElt::terms() const {
  std::vector<std::pair<ExtElt, LaurentPoly>> out;
  for (const auto& [k, part] : parts_)
    for (std::size_t x = 0; x < part.size(); ++x)
      if (!part[x].is_zero()) out.push_back({{static_cast<int>(x), k}, part[x]});
  return out;
}

bool HeckeElt::is_zero() const {
  for (const auto& [k, part] : parts_)
    for (const auto& a : part)
      if (!a.is_zero()) return false;
  return true;
}

void HeckeElt::check_same(const HeckeElt& b) const {
  if (sys_ != b.sys_) throw std::invalid_argument("Hecke elements of different systems");
}

HeckeElt HeckeElt::operator+(const HeckeElt& b) const {
  check_same(b);
  HeckeElt r = *this;
  for (const auto& [w, a] : b.terms()) r.add_term(w, a);
  return r;
}

HeckeElt HeckeElt::operator-(const HeckeElt& b) const {
  check_same(b);
  HeckeElt r = *this;
  for (const auto& [w, a] : b.terms()) r.add_term(w, -a);
  return r;
}

HeckeElt HeckeElt::scaled(const LaurentPoly& a) const {
  HeckeElt r(sys_);
  for (const auto& [w, c] : terms()) r.add_term(w, c * a);
  return r;
}

bool operator==(const HeckeElt& a, const HeckeElt& b) { return a.sys_ == b.sys_ && a.terms() == b.terms(); }

void right_mul_Ts(const WeylGroup& W, const std::vector<LaurentPoly>& in, int s, std::vector<LaurentPoly>& out) {
  out.assign(in.size(), LaurentPoly());
  for (std::size_t w = 0; w < in.size(); ++w) {
    const LaurentPoly& a = in[w];
    if (a.is_zero()) continue;
    int ws = W.rmul(static_cast<int>(w), s);
    out[ws] += a;
    if (W.length(ws) < W.length(static_cast<int>(w))) out[w] += a * kVminusVinv;
  }
}

HeckeElt HeckeElt::times_Ts(int s) const {
  HeckeElt r(sys_);
  for (const auto& [k, part] : parts_) {
    // T_x T_phi^k T_s = T_x T_{eps^k(s)} T_phi^k.
    int sk = s;
    for (int i = 0; i < k; ++i) sk = sys_->eps_gen(sk);
    std::vector<LaurentPoly> out;
    right_mul_Ts(sys_->W(), part, sk, out);
    r.parts_[k] = std::move(out);
  }
  return r;
}

HeckeElt HeckeElt::times_Ts_inv(int s) const { return times_Ts(s) - scaled(kVminusVinv); }

HeckeElt HeckeElt::operator*(const HeckeElt& b) const {
  check_same(b);
  HeckeElt r(sys_);
  const WeylGroup& W = sys_->W();
  for (const auto& [kb, part] : b.parts_) {
    for (std::size_t y = 0; y < part.size(); ++y) {
      if (part[y].is_zero()) continue;
      HeckeElt x = *this;
      for (int s : W.word(static_cast<int>(y))) x = x.times_Ts(s);
      for (const auto& [w, a] : x.terms()) r.add_term({w.w, w.k + kb}, a * part[y]);
    }
  }
  return r;
}

HeckeElt hecke_mul(const HeckeElt& a, const HeckeElt& b) { return a * b; }

std::string HeckeElt::str() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, a] : terms()) {
    os << (first ? "" : " + ") << '(' << a.str() << ")*T[" << sys_->ext_string(w) << ']';
    first = false;
  }
  return first ? "0" : os.str();
}

namespace {

// T_{x^-1}^-1 = T_{s_1}^-1 ... T_{s_m}^-1 for x = s_1 ... s_m.
HeckeElt T_inv_of_inverse(const std::shared_ptr<const TwistedWeylSystem>& sys, int x) {
  HeckeElt h = HeckeElt::one(sys);
  for (int s : sys->W().word(x)) h = h.times_Ts_inv(s);
  return h;
}

HeckeElt phi_shifted(const HeckeElt& h, int k) {
  HeckeElt r(h.sys_ptr());
  for (const auto& [w, a] : h.terms()) r.add_term({w.w, w.k + k}, a);
  return r;
}

}  // namespace

HeckeElt bar_h(const HeckeElt& h) {
  auto sys = h.sys_ptr();
  HeckeElt r(sys);
  for (const auto& [w, a] : h.terms()) r = r + phi_shifted(T_inv_of_inverse(sys, w.w), w.k).scaled(a.bar());
  return r;
}

HeckeElt dagger(const HeckeElt& h) {
  auto sys = h.sys_ptr();
  HeckeElt r(sys);
  for (const auto& [w, a] : h.terms()) {
    LaurentPoly c = sys->W().length(w.w) % 2 ? -a : a;
    r = r + phi_shifted(T_inv_of_inverse(sys, w.w), w.k).scaled(c);
  }
  return r;
}

HeckeElt T_inverse(std::shared_ptr<const TwistedWeylSystem> sys, ExtElt w) {
  int x = sys->eps_power(w.w, -w.k);
  const auto& word = sys->W().word(x);
  HeckeElt h = HeckeElt::one(sys);
  for (auto it = word.rbegin(); it != word.rend(); ++it) h = h.times_Ts_inv(*it);
  return phi_shifted(h, -w.k);
}

HeckeElt c_elt(std::shared_ptr<const TwistedWeylSystem> sys, const KLTable& kl, ExtElt w) {
  HeckeElt h(sys);
  const WeylGroup& W = sys->W();
  for (int y = 0; y <= w.w; ++y) {
    const LaurentPoly& p = kl.P(y, w.w);
    if (p.is_zero()) continue;
    h.add_term({y, w.k}, p.substitute_power(2).shifted(W.length(y) - W.length(w.w)));
  }
  return h;
}

HeckeElt c_dagger_elt(std::shared_ptr<const TwistedWeylSystem> sys, const KLTable& kl, ExtElt w) {
  HeckeElt h(sys);
  const WeylGroup& W = sys->W();
  for (int y = 0; y <= w.w; ++y) {
    const LaurentPoly& p = kl.P(y, w.w);
    if (p.is_zero()) continue;
    LaurentPoly a = p.substitute_power(-2).shifted(W.length(w.w) - W.length(y));
    h.add_term({y, w.k}, W.length(y) % 2 ? -a : a);
  }
  return h;
}

HeckeElt ctilde_elt(std::shared_ptr<const TwistedWeylSystem> sys, const KLTable& kl, ExtElt w) {
  HeckeElt h(sys);
  const WeylGroup& W = sys->W();
  int w0 = W.longest();
  int x = w.w;
  for (int z = x; z < static_cast<int>(W.size()); ++z) {
    const LaurentPoly& p = kl.P(W.mul(w0, z), W.mul(w0, x));
    if (p.is_zero()) continue;
    int d = W.length(z) - W.length(x);
    LaurentPoly a = p.substitute_power(2).shifted(-d);
    h.add_term({z, w.k}, d % 2 ? -a : a);
  }
  return h;
}

DaggerBasis dagger_basis(const KLTable& kl) {
  const WeylGroup& W = kl.W();
  std::size_t n = W.size();
  DaggerBasis db;
  db.c_in_T.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y <= x; ++y) {
      const LaurentPoly& p = kl.P(static_cast<int>(y), static_cast<int>(x));
      if (p.is_zero()) continue;
      LaurentPoly a = p.substitute_power(-2).shifted(W.length(static_cast<int>(x)) - W.length(static_cast<int>(y)));
      db.c_in_T[x].emplace_back(static_cast<int>(y), W.length(static_cast<int>(y)) % 2 ? -a : a);
    }
  }
  db.T_in_c.resize(n);
  std::vector<LaurentPoly> R(n);
  for (std::size_t w = 0; w < n; ++w) {
    for (auto& a : R) a = LaurentPoly();
    R[w] = 1;
    for (int x = static_cast<int>(w); x >= 0; --x) {
      if (R[x].is_zero()) continue;
      LaurentPoly q = W.length(x) % 2 ? -R[x] : R[x];
      for (const auto& [y, c] : db.c_in_T[x]) R[y] -= q * c;
      db.T_in_c[w].emplace_back(x, q);
    }
  }
  return db;
}

std::map<int, LaurentPoly> to_c_basis(const KLTable& kl, const HeckeElt& h) {
  const WeylGroup& W = kl.W();
  std::vector<LaurentPoly> R(W.size());
  for (const auto& [w, a] : h.terms()) {
    if (w.k != 0) throw std::invalid_argument("to_c_basis expects an element of H");
    R[w.w] = a;
  }
  std::map<int, LaurentPoly> out;
  for (int x = static_cast<int>(W.size()) - 1; x >= 0; --x) {
    if (R[x].is_zero()) continue;
    LaurentPoly a = R[x];
    out[x] = a;
    for (int y = 0; y <= x; ++y) {
      const LaurentPoly& p = kl.P(y, x);
      if (!p.is_zero()) R[y] -= a * p.substitute_power(2).shifted(W.length(y) - W.length(x));
    }
  }
  return out;
}

std::map<int, LaurentPoly> r_constants(std::shared_ptr<const TwistedWeylSystem> sys, const KLTable& kl, int x,
                                       int y) {
  return to_c_basis(kl, c_elt(sys, kl, {x, 0}) * c_elt(sys, kl, {y, 0}));
}

}  // namespace ht
