#include <map>
#include <utility>

#include "virmod/reference/oracles.hpp"

namespace virmod::reference {

namespace {

using Monomial = std::vector<int>;  // descending mode numbers n1 >= n2 >= ...
using State = std::map<Monomial, Rational>;

int level_of(const Monomial& m) {
  int n = 0;
  for (int x : m) n += x;
  return n;
}

class Straightener {
 public:
  Straightener(Rational c, Rational h) : c_(std::move(c)), h_(std::move(h)) {}

  // L_k applied to the basis vector `m`, expressed in the ordered basis.
  const State& apply(int k, const Monomial& m) {
    const auto key = std::make_pair(k, m);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    State out;
    if (k < 0) {
      const int j = -k;
      if (m.empty() || j >= m.front()) {
        Monomial mm{j};
        mm.insert(mm.end(), m.begin(), m.end());
        out[mm] += 1;
      } else {
        const int n1 = m.front();
        const Monomial rest(m.begin() + 1, m.end());
        // L_{-j} L_{-n1} = L_{-n1} L_{-j} + (n1 - j) L_{-j-n1}
        add(out, apply_to_state(-n1, apply(-j, rest)), 1);
        add(out, apply(-(j + n1), rest), n1 - j);
      }
    } else if (k == 0) {
      out[m] = h_ + level_of(m);
    } else if (!m.empty()) {
      const int n1 = m.front();
      const Monomial rest(m.begin() + 1, m.end());
      // L_k L_{-n1} = L_{-n1} L_k + (k + n1) L_{k-n1} + c/12 (k^3 - k) delta_{k,n1}
      add(out, apply_to_state(-n1, apply(k, rest)), 1);
      add(out, apply(k - n1, rest), k + n1);
      if (k == n1) {
        Rational central = c_ * (static_cast<long>(k) * k * k - k);
        central /= 12;
        out[rest] += central;
      }
    }
    for (auto it = out.begin(); it != out.end();) it = sgn(it->second) == 0 ? out.erase(it) : std::next(it);
    return memo_.emplace(key, std::move(out)).first->second;
  }

  State apply_to_state(int k, const State& s) {
    State out;
    for (const auto& [m, coeff] : s) add(out, apply(k, m), coeff);
    return out;
  }

 private:
  static void add(State& into, const State& from, const Rational& factor) {
    for (const auto& [m, coeff] : from) into[m] += factor * coeff;
  }

  Rational c_;
  Rational h_;
  std::map<std::pair<int, Monomial>, State> memo_;
};

void partitions(int n, int max_part, Monomial& prefix, std::vector<Monomial>& out) {
  if (n == 0) {
    out.push_back(prefix);
    return;
  }
  for (int k = std::min(n, max_part); k >= 1; --k) {
    prefix.push_back(k);
    partitions(n - k, k, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<std::vector<Rational>> gram_matrix(const Rational& c, const Rational& h, int level) {
  std::vector<Monomial> basis;
  Monomial prefix;
  partitions(level, level, prefix, basis);
  Straightener st(c, h);
  const std::size_t n = basis.size();
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      // <L_{-lambda} v, L_{-mu} v> = coefficient of v in L_{lambda_k} ... L_{lambda_1} L_{-mu} v
      State s;
      s[basis[b]] = 1;
      for (int mode : basis[a]) s = st.apply_to_state(mode, s);
      auto it = s.find(Monomial{});
      g[a][b] = it == s.end() ? Rational(0) : it->second;
    }
  return g;
}

long rational_rank(std::vector<std::vector<Rational>> m) {
  long rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && sgn(m[piv][c]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
    ++rank;
  }
  return rank;
}

std::vector<long> graded_dimensions(const Rational& c, const Rational& h, int max_level) {
  std::vector<long> dims;
  for (int n = 0; n <= max_level; ++n) dims.push_back(rational_rank(gram_matrix(c, h, n)));
  return dims;
}

}  // namespace virmod::reference
