#include "gwp1/multiseries.hpp"

#include <algorithm>
#include <sstream>

namespace gwp1 {

namespace {

constexpr long kInf = MultiSeries::kInf;

long sat_add(long a, long b) {
  if (a >= kInf || b >= kInf) {
    if (a <= -kInf || b <= -kInf) throw AlgebraError("inf - inf in window arithmetic");
    return kInf;
  }
  if (a <= -kInf || b <= -kInf) return -kInf;
  return std::clamp(a + b, -kInf, kInf);
}

}  // namespace

void VarWindow::canonicalize() {
  if (support_empty()) {
    slo = kInf;
    shi = -kInf;
    klo = -kInf;
    khi = kInf;
    return;
  }
  slo = std::clamp(slo, -kInf, kInf);
  shi = std::clamp(shi, -kInf, kInf);
  klo = std::clamp(klo, -kInf, kInf);
  khi = std::clamp(khi, -kInf, kInf);
  if (klo <= slo) klo = -kInf;
  if (khi >= shi) khi = kInf;
}

struct MsOps {
  // Aligns two series onto the union of their variable sets.
  struct Aligned {
    std::vector<std::string> vars;
    std::vector<VarWindow> wa, wb;
    std::vector<int> ia, ib;  // union index -> operand index (-1 if absent)
  };

  static Aligned align(const MultiSeries& a, const MultiSeries& b) {
    Aligned r;
    std::vector<std::string> u = a.vars_;
    u.insert(u.end(), b.vars_.begin(), b.vars_.end());
    std::sort(u.begin(), u.end());
    u.erase(std::unique(u.begin(), u.end()), u.end());
    r.vars = u;
    for (const auto& v : u) {
      auto fa = std::find(a.vars_.begin(), a.vars_.end(), v);
      auto fb = std::find(b.vars_.begin(), b.vars_.end(), v);
      r.ia.push_back(fa == a.vars_.end() ? -1 : static_cast<int>(fa - a.vars_.begin()));
      r.ib.push_back(fb == b.vars_.end() ? -1 : static_cast<int>(fb - b.vars_.begin()));
      r.wa.push_back(r.ia.back() < 0 ? VarWindow::full_constant() : a.win_[r.ia.back()]);
      r.wb.push_back(r.ib.back() < 0 ? VarWindow::full_constant() : b.win_[r.ib.back()]);
    }
    return r;
  }

  static MultiSeries::Key remap(const MultiSeries::Key& k, const std::vector<int>& idx) {
    MultiSeries::Key r(idx.size(), 0);
    for (size_t i = 0; i < idx.size(); ++i)
      if (idx[i] >= 0) r[i] = k[static_cast<size_t>(idx[i])];
    return r;
  }

  static bool in_windows(const MultiSeries::Key& k, const std::vector<VarWindow>& w) {
    for (size_t i = 0; i < k.size(); ++i) {
      const auto& win = w[i];
      if (k[i] < win.slo || k[i] > win.shi) return false;
      if (k[i] < win.klo || k[i] > win.khi) return false;
    }
    return true;
  }

  static void insert(MultiSeries& s, MultiSeries::Key k, const Rational& c) {
    if (c.is_zero()) return;
    auto it = s.c_.find(k);
    if (it == s.c_.end()) {
      s.c_.emplace(std::move(k), c);
    } else {
      it->second += c;
      if (it->second.is_zero()) s.c_.erase(it);
    }
  }
};

MultiSeries MultiSeries::constant(const Rational& c) {
  MultiSeries s;
  if (!c.is_zero()) s.c_[{}] = c;
  return s;
}

MultiSeries MultiSeries::monomial(const std::vector<std::pair<std::string, long>>& m,
                                  const Rational& c) {
  MultiSeries s;
  std::map<std::string, long> sorted;
  for (const auto& [v, e] : m) {
    if (sorted.count(v)) throw AlgebraError("duplicate variable in monomial: " + v);
    sorted[v] = e;
  }
  Key key;
  for (const auto& [v, e] : sorted) {
    s.vars_.push_back(v);
    VarWindow w{e, e, -kInf, kInf};
    w.canonicalize();
    s.win_.push_back(w);
    key.push_back(e);
  }
  if (!c.is_zero()) s.c_[key] = c;
  return s;
}

MultiSeries MultiSeries::from_uni(const UniSeries& u) {
  MultiSeries s;
  s.vars_.push_back(u.var());
  VarWindow w;
  if (u.trunc() >= kInf) {
    // Exact object: support is exactly the stored key range.
    if (u.terms().empty()) {
      w = VarWindow::empty_support();
    } else {
      w = {u.terms().begin()->first, u.terms().rbegin()->first, -kInf, kInf};
    }
  } else {
    w = {u.low(), kInf, -kInf, u.trunc() - 1};
  }
  w.canonicalize();
  s.win_.push_back(w);
  for (const auto& [e, c] : u.terms()) s.c_[{e}] = c;
  return s;
}

bool MultiSeries::has_var(const std::string& v) const {
  return std::find(vars_.begin(), vars_.end(), v) != vars_.end();
}

const VarWindow& MultiSeries::window(const std::string& v) const {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it == vars_.end()) {
    static const VarWindow kConst = VarWindow::full_constant();
    return kConst;
  }
  return win_[static_cast<size_t>(it - vars_.begin())];
}

bool MultiSeries::is_exact_zero() const {
  if (!c_.empty()) return false;
  for (const auto& w : win_)
    if (!w.fully_known() && !w.support_empty()) return false;
  return true;
}

Rational MultiSeries::coeff(const std::map<std::string, long>& mono) const {
  for (const auto& [v, e] : mono) {
    if (!has_var(v) && e != 0) return Rational(0);
  }
  Key key(vars_.size(), 0);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = mono.find(vars_[i]);
    const long e = it == mono.end() ? 0 : it->second;
    if (!win_[i].known(e))
      throw TruncationError("coefficient of " + vars_[i] + "^" + std::to_string(e) +
                            " is beyond the known window");
    key[i] = e;
  }
  auto it = c_.find(key);
  return it == c_.end() ? Rational(0) : it->second;
}

MultiSeries MultiSeries::coefficient_of(const std::string& var, long e) const {
  auto vit = std::find(vars_.begin(), vars_.end(), var);
  if (vit == vars_.end()) {
    if (e == 0) return *this;
    return MultiSeries();  // constant in var: zero coefficient, exactly
  }
  const size_t vi = static_cast<size_t>(vit - vars_.begin());
  if (!win_[vi].known(e))
    throw TruncationError("coefficient of " + var + "^" + std::to_string(e) +
                          " is beyond the known window");
  MultiSeries r;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i == vi) continue;
    r.vars_.push_back(vars_[i]);
    r.win_.push_back(win_[i]);
  }
  for (const auto& [k, c] : c_) {
    if (k[vi] != e) continue;
    Key nk;
    for (size_t i = 0; i < k.size(); ++i)
      if (i != vi) nk.push_back(k[i]);
    r.c_[nk] = c;
  }
  return r;
}

MultiSeries MultiSeries::residue(const std::string& var) const {
  return coefficient_of(var, -1);
}

MultiSeries MultiSeries::renamed(const std::string& from, const std::string& to) const {
  if (from == to) return *this;
  if (has_var(to)) throw AlgebraError("rename target variable already present: " + to);
  auto vit = std::find(vars_.begin(), vars_.end(), from);
  if (vit == vars_.end()) return *this;
  const size_t vi = static_cast<size_t>(vit - vars_.begin());

  std::vector<std::string> nv = vars_;
  nv[vi] = to;
  std::vector<size_t> order(nv.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](size_t x, size_t y) { return nv[x] < nv[y]; });

  MultiSeries r;
  for (size_t i : order) {
    r.vars_.push_back(nv[i]);
    r.win_.push_back(win_[i]);
  }
  for (const auto& [k, c] : c_) {
    Key nk(k.size());
    for (size_t i = 0; i < order.size(); ++i) nk[i] = k[order[i]];
    r.c_[nk] = c;
  }
  return r;
}

MultiSeries MultiSeries::diagonal(const std::string& v1, const std::string& v2,
                                  const std::string& out) const {
  if (!has_var(v1) || !has_var(v2))
    throw AlgebraError("diagonal: missing variable " + v1 + " or " + v2);
  const VarWindow a = window(v1), b = window(v2);
  VarWindow w;
  if (a.support_empty() || b.support_empty()) {
    w = VarWindow::empty_support();
  } else {
    w.slo = sat_add(a.slo, b.slo);
    w.shi = sat_add(a.shi, b.shi);
    const long lo1 = a.klo <= -kInf ? -kInf : sat_add(a.klo, b.shi);
    const long lo2 = b.klo <= -kInf ? -kInf : sat_add(b.klo, a.shi);
    const long hi1 = a.khi >= kInf ? kInf : sat_add(a.khi, b.slo);
    const long hi2 = b.khi >= kInf ? kInf : sat_add(b.khi, a.slo);
    w.klo = std::max(lo1, lo2);
    w.khi = std::min(hi1, hi2);
    w.canonicalize();
  }

  const size_t i1 = static_cast<size_t>(
      std::find(vars_.begin(), vars_.end(), v1) - vars_.begin());
  const size_t i2 = static_cast<size_t>(
      std::find(vars_.begin(), vars_.end(), v2) - vars_.begin());

  MultiSeries r;
  std::vector<std::pair<std::string, const VarWindow*>> nv;
  for (size_t i = 0; i < vars_.size(); ++i) {
    if (i == i1 || i == i2) continue;
    nv.emplace_back(vars_[i], &win_[i]);
  }
  if (std::any_of(nv.begin(), nv.end(),
                  [&](const auto& p) { return p.first == out; }))
    throw AlgebraError("diagonal output variable already present: " + out);
  nv.emplace_back(out, &w);
  std::sort(nv.begin(), nv.end());
  for (const auto& [name, win] : nv) {
    r.vars_.push_back(name);
    r.win_.push_back(*win);
  }
  const size_t oi = static_cast<size_t>(
      std::find(r.vars_.begin(), r.vars_.end(), out) - r.vars_.begin());

  for (const auto& [k, c] : c_) {
    const long e = k[i1] + k[i2];
    if (e < w.slo || e > w.shi || e < w.klo || e > w.khi) continue;
    Key nk(r.vars_.size(), 0);
    size_t j = 0;
    for (size_t i = 0; i < vars_.size(); ++i) {
      if (i == i1 || i == i2) continue;
      const std::string& name = vars_[i];
      const size_t pos = static_cast<size_t>(
          std::find(r.vars_.begin(), r.vars_.end(), name) - r.vars_.begin());
      nk[pos] = k[i];
      ++j;
    }
    nk[oi] = e;
    MsOps::insert(r, std::move(nk), c);
  }
  return r;
}

MultiSeries MultiSeries::restrict_knowledge(const std::string& var, long klo,
                                            long khi) const {
  auto vit = std::find(vars_.begin(), vars_.end(), var);
  if (vit == vars_.end()) throw AlgebraError("restrict_knowledge: no variable " + var);
  const size_t vi = static_cast<size_t>(vit - vars_.begin());
  MultiSeries r = *this;
  VarWindow& w = r.win_[vi];
  w.klo = std::max(w.klo, klo);
  w.khi = std::min(w.khi, khi);
  w.canonicalize();
  for (auto it = r.c_.begin(); it != r.c_.end();) {
    const long e = it->first[vi];
    const bool keep = (e >= w.klo && e <= w.khi) || e < w.slo || e > w.shi;
    it = keep ? std::next(it) : r.c_.erase(it);
  }
  return r;
}

MultiSeries MultiSeries::operator-() const {
  MultiSeries r = *this;
  for (auto& [k, c] : r.c_) c = -c;
  return r;
}

MultiSeries MultiSeries::operator*(const Rational& s) const {
  MultiSeries r = *this;
  if (s.is_zero()) {
    r.c_.clear();
    return r;
  }
  for (auto& [k, c] : r.c_) c = c * s;
  return r;
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
  auto al = MsOps::align(a, b);
  MultiSeries r;
  r.vars_ = al.vars;
  for (size_t i = 0; i < al.vars.size(); ++i) {
    VarWindow w;
    w.slo = std::min(al.wa[i].slo, al.wb[i].slo);
    w.shi = std::max(al.wa[i].shi, al.wb[i].shi);
    w.klo = std::max(al.wa[i].klo, al.wb[i].klo);
    w.khi = std::min(al.wa[i].khi, al.wb[i].khi);
    w.canonicalize();
    r.win_.push_back(w);
  }
  for (const auto& [k, c] : a.c_) {
    auto nk = MsOps::remap(k, al.ia);
    if (MsOps::in_windows(nk, r.win_)) MsOps::insert(r, std::move(nk), c);
  }
  for (const auto& [k, c] : b.c_) {
    auto nk = MsOps::remap(k, al.ib);
    if (MsOps::in_windows(nk, r.win_)) MsOps::insert(r, std::move(nk), c);
  }
  return r;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b) { return a + (-b); }

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
  auto al = MsOps::align(a, b);
  MultiSeries r;
  r.vars_ = al.vars;
  bool empty = false;
  for (size_t i = 0; i < al.vars.size(); ++i) {
    const VarWindow& x = al.wa[i];
    const VarWindow& y = al.wb[i];
    VarWindow w;
    if (x.support_empty() || y.support_empty()) {
      w = VarWindow::empty_support();
      empty = true;
    } else {
      w.slo = sat_add(x.slo, y.slo);
      w.shi = sat_add(x.shi, y.shi);
      const long lo1 = x.klo <= -kInf ? -kInf : sat_add(x.klo, y.shi);
      const long lo2 = y.klo <= -kInf ? -kInf : sat_add(y.klo, x.shi);
      const long hi1 = x.khi >= kInf ? kInf : sat_add(x.khi, y.slo);
      const long hi2 = y.khi >= kInf ? kInf : sat_add(y.khi, x.slo);
      w.klo = std::max(lo1, lo2);
      w.khi = std::min(hi1, hi2);
      w.canonicalize();
    }
    r.win_.push_back(w);
  }
  if (empty) {
    for (auto& w : r.win_) w = VarWindow::empty_support();
    return r;
  }
  const size_t n = al.vars.size();
  std::vector<std::pair<MultiSeries::Key, Rational>> bt;
  bt.reserve(b.c_.size());
  for (const auto& [k, c] : b.c_) bt.emplace_back(MsOps::remap(k, al.ib), c);

  for (const auto& [ka, ca] : a.c_) {
    const auto ra = MsOps::remap(ka, al.ia);
    for (const auto& [rb, cb] : bt) {
      MultiSeries::Key k(n);
      bool ok = true;
      for (size_t i = 0; i < n; ++i) {
        k[i] = ra[i] + rb[i];
        const auto& w = r.win_[i];
        if (k[i] < w.klo || k[i] > w.khi || k[i] < w.slo || k[i] > w.shi) {
          ok = false;
          break;
        }
      }
      if (ok) MsOps::insert(r, std::move(k), ca * cb);
    }
  }
  return r;
}

MultiSeries MultiSeries::pow(long e) const {
  if (e < 0) throw AlgebraError("MultiSeries::pow needs e >= 0");
  MultiSeries r = constant(Rational(1));
  MultiSeries b = *this;
  long n = e;
  while (true) {
    if (n & 1) r = r * b;
    n >>= 1;
    if (n == 0) break;
    b = b * b;
  }
  return r;
}

void MultiSeries::ensure_var(const std::string& v, const VarWindow& w) {
  auto it = std::find(vars_.begin(), vars_.end(), v);
  if (it != vars_.end()) {
    win_[static_cast<size_t>(it - vars_.begin())] = w;
    return;
  }
  // Insert keeping names sorted; pad existing keys.
  size_t pos = 0;
  while (pos < vars_.size() && vars_[pos] < v) ++pos;
  vars_.insert(vars_.begin() + static_cast<long>(pos), v);
  win_.insert(win_.begin() + static_cast<long>(pos), w);
  std::map<Key, Rational> nc;
  for (const auto& [k, c] : c_) {
    Key nk = k;
    nk.insert(nk.begin() + static_cast<long>(pos), 0);
    nc.emplace(std::move(nk), c);
  }
  c_ = std::move(nc);
}

void MultiSeries::add_term(const std::map<std::string, long>& mono, const Rational& c) {
  for (const auto& [v, e] : mono) {
    if (!has_var(v)) throw AlgebraError("add_term: unknown variable " + v);
    (void)e;
  }
  Key key(vars_.size(), 0);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = mono.find(vars_[i]);
    key[i] = it == mono.end() ? 0 : it->second;
  }
  if (!MsOps::in_windows(key, win_)) throw AlgebraError("add_term outside window");
  MsOps::insert(*this, std::move(key), c);
}

std::string MultiSeries::str(size_t max_terms) const {
  std::ostringstream os;
  size_t shown = 0;
  for (const auto& [k, c] : c_) {
    if (shown++ >= max_terms) {
      os << " + ... (" << c_.size() << " terms)";
      break;
    }
    os << (shown == 1 ? "" : " + ") << "(" << c.pretty() << ")";
    for (size_t i = 0; i < vars_.size(); ++i)
      if (k[i] != 0) os << "*" << vars_[i] << "^" << k[i];
  }
  if (c_.empty()) os << "0";
  os << "  [";
  for (size_t i = 0; i < vars_.size(); ++i) {
    const auto& w = win_[i];
    os << vars_[i] << ": s[" << (w.slo <= -kInf ? std::string("-inf") : std::to_string(w.slo))
       << "," << (w.shi >= kInf ? std::string("inf") : std::to_string(w.shi)) << "] k["
       << (w.klo <= -kInf ? std::string("-inf") : std::to_string(w.klo)) << ","
       << (w.khi >= kInf ? std::string("inf") : std::to_string(w.khi)) << "]; ";
  }
  os << "]";
  return os.str();
}

MultiSeries binom_pow(const MultiSeries& u, const Rational& alpha, long max_pow) {
  MultiSeries r = MultiSeries::constant(Rational(1));
  MultiSeries p = MultiSeries::constant(Rational(1));
  for (long k = 1; k <= max_pow; ++k) {
    p = p * u;
    if (p.no_known_terms()) {
      // Adopt the windows of the vanished tail so knowledge stays honest.
      return r + p;
    }
    r = r + p * binom_rational(alpha, k);
  }
  throw TruncationError("binom_pow did not terminate; impose tighter windows");
}

MultiSeries geometric_inverse(const MultiSeries& u, long max_pow) {
  return binom_pow(u, Rational(-1), max_pow);
}

DiffReport compare_series(const MultiSeries& a, const MultiSeries& b,
                          size_t max_mismatches) {
  DiffReport rep;
  const MultiSeries d = a - b;
  std::ostringstream w;
  for (const auto& v : d.vars()) {
    const auto& win = d.window(v);
    w << v << ":[" << (win.klo <= -MultiSeries::kInf ? std::string("-inf")
                                                     : std::to_string(win.klo))
      << "," << (win.khi >= MultiSeries::kInf ? std::string("inf")
                                              : std::to_string(win.khi))
      << "] ";
  }
  rep.joint_window = w.str();
  rep.compared_terms = static_cast<long>(d.terms().size());
  for (const auto& [k, c] : d.terms()) {
    rep.equal = false;
    if (rep.mismatches.size() >= max_mismatches) break;
    DiffEntry e;
    for (size_t i = 0; i < d.vars().size(); ++i)
      if (k[i] != 0) e.mono[d.vars()[i]] = k[i];
    std::map<std::string, long> mono = e.mono;
    e.lhs = a.coeff(mono);
    e.rhs = b.coeff(mono);
    rep.mismatches.push_back(std::move(e));
  }
  return rep;
}

bool joint_knowledge_covers(const MultiSeries& a, const MultiSeries& b,
                            const std::string& var, long lo, long hi) {
  const auto& wa = a.window(var);
  const auto& wb = b.window(var);
  for (long e = lo; e <= hi; ++e)
    if (!wa.known(e) || !wb.known(e)) return false;
  return true;
}

}  // namespace gwp1
