#include "afdweno/legendre.hpp"

#include "afdweno/types.hpp"

#include <cmath>
#include <string>

namespace afdweno {

namespace {

// Monomial coefficients of L_k: L_k(x) = sum_a kMono[k][a] x^a.
constexpr std::array<std::array<double, kMaxDegree + 1>, kMaxDegree + 1> kMono = {{
    {1.0},
    {0.0, 1.0},
    {-1.0 / 12.0, 0.0, 1.0},
    {0.0, -3.0 / 20.0, 0.0, 1.0},
    {3.0 / 560.0, 0.0, -3.0 / 14.0, 0.0, 1.0},
    {0.0, 5.0 / 336.0, 0.0, -5.0 / 18.0, 0.0, 1.0},
    {-5.0 / 14784.0, 0.0, 5.0 / 176.0, 0.0, -15.0 / 44.0, 0.0, 1.0},
    {0.0, -35.0 / 27456.0, 0.0, 105.0 / 2288.0, 0.0, -21.0 / 52.0, 0.0, 1.0},
    {7.0 / 329472.0, 0.0, -7.0 / 2288.0, 0.0, 7.0 / 104.0, 0.0, -7.0 / 15.0, 0.0, 1.0},
}};

struct Row {
  std::array<long long, 9> num;
  long long den;
};

// Interpolation coefficient tables. Row k gives the Legendre mode c_k as a
// rational combination of the stencil values (ascending offset order).
constexpr Row kCenterL3[] = {
    {{1, -2, 25}, 24}, {{1, -4, 3}, 2}, {{1, -2, 1}, 2}};
constexpr Row kCenterC3[] = {
    {{1, 22, 1}, 24}, {{-1, 0, 1}, 2}, {{1, -2, 1}, 2}};
constexpr Row kCenterR3[] = {
    {{25, -2, 1}, 24}, {{-3, 4, -1}, 2}, {{1, -2, 1}, 2}};
constexpr Row kCenterC5[] = {
    {{-17, 308, 5178, 308, -17}, 5760},
    {{17, -154, 0, 154, -17}, 240},
    {{-11, 212, -402, 212, -11}, 336},
    {{-1, 2, 0, -2, 1}, 12},
    {{1, -4, 6, -4, 1}, 24}};
constexpr Row kCenterC7[] = {
    {{367, -5058, 57249, 862564, 57249, -5058, 367}, 967680},
    {{-367, 3372, -19083, 0, 19083, -3372, 367}, 26880},
    {{111, -1546, 18625, -34380, 18625, -1546, 111}, 26880},
    {{17, -140, 229, 0, -229, 140, -17}, 864},
    {{-41, 510, -1671, 2404, -1671, 510, -41}, 6336},
    {{-1, 4, -5, 0, 5, -4, 1}, 240},
    {{1, -6, 15, -20, 15, -6, 1}, 720}};
constexpr Row kCenterC9[] = {
    {{-27859, 399032, -3207892, 29039624, 412080590, 29039624, -3207892, 399032, -27859},
     464486400},
    {{27859, -299274, 1603946, -7259906, 0, 7259906, -1603946, 299274, -27859}, 9676800},
    {{-13789, 198224, -1610524, 15523184, -28194190, 15523184, -1610524, 198224, -13789},
     21288960},
    {{-10223, 106218, -512722, 747682, 0, -747682, 512722, -106218, 10223}, 2280960},
    {{7243, -100584, 733204, -2143448, 3007170, -2143448, 733204, -100584, 7243}, 6589440},
    {{101, -918, 2662, -2974, 0, 2974, -2662, 918, -101}, 74880},
    {{-29, 352, -1532, 3424, -4430, 3424, -1532, 352, -29}, 86400},
    {{-1, 6, -14, 14, 0, -14, 14, -6, 1}, 10080},
    {{1, -8, 28, -56, 70, -56, 28, -8, 1}, 40320}};
constexpr Row kZbL3[] = {{{-1, 8, 5}, 12}, {{0, -1, 1}, 1}, {{1, -2, 1}, 2}};
constexpr Row kZbR3[] = {{{5, 8, -1}, 12}, {{-1, 1, 0}, 1}, {{1, -2, 1}, 2}};
constexpr Row kZbC4[] = {
    {{-1, 13, 13, -1}, 24}, {{1, -63, 63, -1}, 60}, {{1, -1, -1, 1}, 4}, {{-1, 3, -3, 1}, 6}};
constexpr Row kZbC6[] = {
    {{11, -93, 802, 802, -93, 11}, 1440},
    {{-3, 43, -1794, 1794, -43, 3}, 1680},
    {{-4, 33, -29, -29, 33, -4}, 84},
    {{1, -14, 37, -37, 14, -1}, 54},
    {{1, -3, 2, 2, -3, 1}, 48},
    {{-1, 5, -10, 10, -5, 1}, 120}};
constexpr Row kZbC8[] = {
    {{-191, 1879, -9531, 68323, 68323, -9531, 1879, -191}, 120960},
    {{79, -1093, 9399, -325685, 325685, -9399, 1093, -79}, 302400},
    {{67, -655, 3243, -2655, -2655, 3243, -655, 67}, 6720},
    {{-391, 5377, -45171, 111365, -111365, 45171, -5377, 391}, 142560},
    {{-37, 317, -729, 449, 449, -729, 317, -37}, 6336},
    {{31, -373, 1431, -2645, 2645, -1431, 373, -31}, 18720},
    {{1, -5, 9, -5, -5, 9, -5, 1}, 1440},
    {{-1, 7, -21, 35, -35, 21, -7, 1}, 5040}};

using Table = std::array<std::array<double, kMaxDegree + 1>, kMaxDegree + 1>;

template <std::size_t N>
constexpr Table to_table(const Row (&rows)[N]) {
  Table t{};
  for (std::size_t k = 0; k < N; ++k)
    for (std::size_t j = 0; j < N; ++j) t[k][j] = double(rows[k].num[j]) / double(rows[k].den);
  return t;
}

struct StencilEntry {
  StencilSpec spec;
  std::string_view name;
  Table table;
};

constexpr std::array<StencilEntry, 11> kStencils = {{
    {{StencilId::center_l3, -2, 3, false}, "CENTER_L3", to_table(kCenterL3)},
    {{StencilId::center_c3, -1, 3, false}, "CENTER_C3", to_table(kCenterC3)},
    {{StencilId::center_r3, 0, 3, false}, "CENTER_R3", to_table(kCenterR3)},
    {{StencilId::center_c5, -2, 5, false}, "CENTER_C5", to_table(kCenterC5)},
    {{StencilId::center_c7, -3, 7, false}, "CENTER_C7", to_table(kCenterC7)},
    {{StencilId::center_c9, -4, 9, false}, "CENTER_C9", to_table(kCenterC9)},
    {{StencilId::zb_l3, -1, 3, true}, "ZB_L3", to_table(kZbL3)},
    {{StencilId::zb_r3, 0, 3, true}, "ZB_R3", to_table(kZbR3)},
    {{StencilId::zb_c4, -1, 4, true}, "ZB_C4", to_table(kZbC4)},
    {{StencilId::zb_c6, -2, 6, true}, "ZB_C6", to_table(kZbC6)},
    {{StencilId::zb_c8, -3, 8, true}, "ZB_C8", to_table(kZbC8)},
}};

// Gram matrix of the smoothness functional:
// G[j][k] = sum_{m>=1} int_{-1/2}^{1/2} L_j^(m) L_k^(m) dxi.
// Restricting to the leading (d+1)x(d+1) block gives the indicator for degree d,
// since modes above d are zero.
Table build_gram() {
  // int_{-1/2}^{1/2} x^n dx
  auto moment = [](int n) { return n % 2 ? 0.0 : 2.0 * std::pow(0.5, n + 1) / (n + 1); };
  Table g{};
  for (int j = 0; j <= kMaxDegree; ++j) {
    for (int k = 0; k <= kMaxDegree; ++k) {
      double sum = 0.0;
      for (int m = 1; m <= std::min(j, k); ++m) {
        for (int a = m; a <= j; ++a) {
          if (kMono[j][a] == 0.0) continue;
          double fa = 1.0;
          for (int q = 0; q < m; ++q) fa *= a - q;
          for (int b = m; b <= k; ++b) {
            if (kMono[k][b] == 0.0) continue;
            double fb = 1.0;
            for (int q = 0; q < m; ++q) fb *= b - q;
            sum += kMono[j][a] * fa * kMono[k][b] * fb * moment(a + b - 2 * m);
          }
        }
      }
      g[j][k] = sum;
    }
  }
  return g;
}

const Table& gram() {
  static const Table g = build_gram();
  return g;
}

}  // namespace

ModalPolynomial::ModalPolynomial(int degree) : degree_(degree) {
  if (degree < 0 || degree > kMaxDegree)
    throw UsageError("ModalPolynomial degree out of range: " + std::to_string(degree));
}

ModalPolynomial::ModalPolynomial(std::initializer_list<double> coeffs)
    : ModalPolynomial(int(coeffs.size()) - 1) {
  int k = 0;
  for (double c : coeffs) coeffs_[k++] = c;
}

void ModalPolynomial::add_scaled(const ModalPolynomial& other, double scale) {
  for (int k = 0; k <= other.degree_; ++k) coeffs_[k] += scale * other.coeffs_[k];
  if (other.degree_ > degree_) degree_ = other.degree_;
}

ModalPolynomial& ModalPolynomial::operator*=(double s) {
  for (int k = 0; k <= degree_; ++k) coeffs_[k] *= s;
  return *this;
}

double eval_legendre(int k, double xi) {
  if (k < 0 || k > kMaxDegree)
    throw UsageError("Legendre index out of range: " + std::to_string(k));
  double v = 0.0;
  for (int a = k; a >= 0; --a) v = v * xi + kMono[k][a];
  return v;
}

namespace {

// d^n L_k / dxi^n at xi = -1/2, 0, +1/2, the points every scheme evaluates.
struct DerivTable {
  std::array<std::array<std::array<double, kMaxDegree + 1>, kMaxDegree + 1>, 3> v{};
};

const DerivTable& deriv_table() {
  static const DerivTable t = [] {
    DerivTable r;
    for (int pt = 0; pt < 3; ++pt) {
      const double xi = 0.5 * (pt - 1);
      for (int k = 0; k <= kMaxDegree; ++k) {
        for (int n = 0; n <= k; ++n) {
          double v = 0.0;
          for (int a = k; a >= n; --a) {
            double f = 1.0;
            for (int q = 0; q < n; ++q) f *= a - q;
            v = v * xi + kMono[k][a] * f;
          }
          r.v[pt][n][k] = v;
        }
      }
    }
    return r;
  }();
  return t;
}

}  // namespace

double eval_poly(const ModalPolynomial& p, int n, double xi) {
  if (n < 0) throw UsageError("negative derivative order");
  const int d = p.degree();
  if (n > d) return 0.0;
  if (xi == -0.5 || xi == 0.0 || xi == 0.5) {
    const auto& row = deriv_table().v[int(2.0 * xi) + 1][n];
    double v = 0.0;
    for (int k = n; k <= d; ++k) v += p[k] * row[k];
    return v;
  }
  std::array<double, kMaxDegree + 1> mono{};
  for (int k = 0; k <= d; ++k)
    for (int a = 0; a <= k; ++a) mono[a] += p[k] * kMono[k][a];
  // Horner on the n-th derivative: sum_{a>=n} mono[a] * a!/(a-n)! * xi^(a-n)
  double v = 0.0;
  for (int a = d; a >= n; --a) {
    double f = 1.0;
    for (int q = 0; q < n; ++q) f *= a - q;
    v = v * xi + mono[a] * f;
  }
  return v;
}

const StencilSpec& stencil_spec(StencilId id) { return kStencils[std::size_t(id)].spec; }

std::string_view stencil_name(StencilId id) { return kStencils[std::size_t(id)].name; }

namespace {

// Fixed-size kernels so the hot loops unroll.
template <int N>
void apply_table(const Table& t, const double* v, ModalPolynomial& p) {
  for (int k = 0; k < N; ++k) {
    double c = 0.0;
    for (int j = 0; j < N; ++j) c += t[k][j] * v[j];
    p[k] = c;
  }
}

// Modes of opposite parity are orthogonal under the functional, so only
// same-parity pairs contribute; the off-diagonal ones twice.
template <int D>
double beta_fixed(const Table& g, const ModalPolynomial& p) {
  double beta = 0.0;
  for (int j = 1; j <= D; ++j) {
    double row = g[j][j] * p[j];
    for (int k = j + 2; k <= D; k += 2) row += 2.0 * g[j][k] * p[k];
    beta += p[j] * row;
  }
  return beta;
}

}  // namespace

ModalPolynomial fit_stencil(StencilId id, std::span<const double> values) {
  const auto& entry = kStencils[std::size_t(id)];
  const int n = entry.spec.size;
  if (int(values.size()) != n)
    throw UsageError(std::string(entry.name) + " expects " + std::to_string(n) + " values, got " +
                     std::to_string(values.size()));
  ModalPolynomial p(n - 1);
  const double* v = values.data();
  switch (n) {
    case 3: apply_table<3>(entry.table, v, p); break;
    case 4: apply_table<4>(entry.table, v, p); break;
    case 5: apply_table<5>(entry.table, v, p); break;
    case 6: apply_table<6>(entry.table, v, p); break;
    case 7: apply_table<7>(entry.table, v, p); break;
    case 8: apply_table<8>(entry.table, v, p); break;
    default: apply_table<9>(entry.table, v, p); break;
  }
  return p;
}

double smoothness_indicator(const ModalPolynomial& p) {
  static const Table& g = gram();
  switch (p.degree()) {
    case 0: return 0.0;
    case 1: return beta_fixed<1>(g, p);
    case 2: return beta_fixed<2>(g, p);
    case 3: return beta_fixed<3>(g, p);
    case 4: return beta_fixed<4>(g, p);
    case 5: return beta_fixed<5>(g, p);
    case 6: return beta_fixed<6>(g, p);
    case 7: return beta_fixed<7>(g, p);
    default: return beta_fixed<8>(g, p);
  }
}

}  // namespace afdweno
