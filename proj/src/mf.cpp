#include "moymf/mf.hpp"

#include <sstream>

namespace moymf {

BaseRing make_base(QuotientRing r) { return std::make_shared<const QuotientRing>(std::move(r)); }

BaseRing polynomial_base(const std::vector<VarId>& vars) { return make_base(QuotientRing(vars)); }

namespace {

BaseRing merged(const BaseRing& a, const BaseRing& b) {
  if (a == b) return a;
  return make_base(combine(*a, *b));
}

Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, std::vector<Poly>(cols)); }

}  // namespace

bool operator==(const MatrixFactorization& a, const MatrixFactorization& b) {
  return a.m0.shifts == b.m0.shifts && a.m1.shifts == b.m1.shifts && a.d0 == b.d0 && a.d1 == b.d1 &&
         a.potential == b.potential && a.potential_degree == b.potential_degree;
}

KoszulRow make_row(const Poly& a, const Poly& b, int deg_a, int deg_b) {
  auto check = [](const Poly& p, int d, const char* which) {
    if (p.is_zero()) return;
    auto hd = p.homogeneous_degree();
    if (!hd || *hd != d)
      throw InhomogeneousRow(std::string("row entry ") + which + " is not homogeneous of degree " +
                             std::to_string(d) + ": " + p.str());
  };
  check(a, deg_a, "a");
  check(b, deg_b, "b");
  if ((deg_b - deg_a) % 2 != 0) throw InhomogeneousRow("row degrees of different parity");
  return {a, b, deg_a, deg_b};
}

Poly KoszulMF::potential() const {
  Poly w;
  for (auto& r : rows) w += r.a * r.b;
  return w;
}

MatrixFactorization unit_object(const BaseRing& base, int potential_degree) {
  MatrixFactorization u;
  u.base = base;
  u.m0.shifts = {0};
  u.d0 = zeros(0, 1);
  u.d1 = zeros(1, 0);
  u.potential_degree = potential_degree;
  return u;
}

MatrixFactorization koszul_expand(const KoszulMF& k) {
  MatrixFactorization x = unit_object(k.base, k.potential_degree);
  for (auto& r : k.rows) {
    if (r.deg_a + r.deg_b != k.potential_degree)
      throw InhomogeneousRow("row degrees " + std::to_string(r.deg_a) + "+" + std::to_string(r.deg_b) +
                             " do not match potential degree " + std::to_string(k.potential_degree));
    MatrixFactorization f;
    f.base = k.base;
    f.m0.shifts = {0};
    f.m1.shifts = {(r.deg_b - r.deg_a) / 2};
    f.d0 = {{r.a}};
    f.d1 = {{r.b}};
    f.potential = r.a * r.b;
    f.potential_degree = k.potential_degree;
    x = tensor(x, f);
  }
  x = grade_shift(x, k.shift);
  if (k.z2 % 2) x = translate(x);
  return x;
}

MatrixFactorization tensor(const MatrixFactorization& x, const MatrixFactorization& y) {
  if (x.potential_degree != y.potential_degree)
    throw IncompatibleBases("potential degrees differ: " + std::to_string(x.potential_degree) + " vs " +
                            std::to_string(y.potential_degree));
  const std::size_t a0 = x.rank0(), a1 = x.rank1(), b0 = y.rank0(), b1 = y.rank1();
  MatrixFactorization t;
  t.base = merged(x.base, y.base);
  t.potential = x.potential + y.potential;
  t.potential_degree = x.potential_degree;

  // M0' = M0(x)N0 + M1(x)N1,  M1' = M1(x)N0 + M0(x)N1
  auto i00 = [&](std::size_t g, std::size_t h) { return g * b0 + h; };
  auto i11 = [&](std::size_t g, std::size_t h) { return a0 * b0 + g * b1 + h; };
  auto j10 = [&](std::size_t g, std::size_t h) { return g * b0 + h; };
  auto j01 = [&](std::size_t g, std::size_t h) { return a1 * b0 + g * b1 + h; };

  const std::size_t r0 = a0 * b0 + a1 * b1, r1 = a1 * b0 + a0 * b1;
  t.m0.shifts.resize(r0);
  t.m1.shifts.resize(r1);
  for (std::size_t g = 0; g < a0; ++g)
    for (std::size_t h = 0; h < b0; ++h) t.m0.shifts[i00(g, h)] = x.m0.shifts[g] + y.m0.shifts[h];
  for (std::size_t g = 0; g < a1; ++g)
    for (std::size_t h = 0; h < b1; ++h) t.m0.shifts[i11(g, h)] = x.m1.shifts[g] + y.m1.shifts[h];
  for (std::size_t g = 0; g < a1; ++g)
    for (std::size_t h = 0; h < b0; ++h) t.m1.shifts[j10(g, h)] = x.m1.shifts[g] + y.m0.shifts[h];
  for (std::size_t g = 0; g < a0; ++g)
    for (std::size_t h = 0; h < b1; ++h) t.m1.shifts[j01(g, h)] = x.m0.shifts[g] + y.m1.shifts[h];

  t.d0 = zeros(r1, r0);
  t.d1 = zeros(r0, r1);
  // d0 = [[dM0, -dN1], [dN0, dM1]]
  for (std::size_t h = 0; h < b0; ++h)
    for (std::size_t g = 0; g < a0; ++g)
      for (std::size_t g2 = 0; g2 < a1; ++g2)
        if (!x.d0[g2][g].is_zero()) t.d0[j10(g2, h)][i00(g, h)] = x.d0[g2][g];
  for (std::size_t g = 0; g < a1; ++g)
    for (std::size_t h = 0; h < b1; ++h)
      for (std::size_t h2 = 0; h2 < b0; ++h2)
        if (!y.d1[h2][h].is_zero()) t.d0[j10(g, h2)][i11(g, h)] = -y.d1[h2][h];
  for (std::size_t g = 0; g < a0; ++g)
    for (std::size_t h = 0; h < b0; ++h)
      for (std::size_t h2 = 0; h2 < b1; ++h2)
        if (!y.d0[h2][h].is_zero()) t.d0[j01(g, h2)][i00(g, h)] = y.d0[h2][h];
  for (std::size_t h = 0; h < b1; ++h)
    for (std::size_t g = 0; g < a1; ++g)
      for (std::size_t g2 = 0; g2 < a0; ++g2)
        if (!x.d1[g2][g].is_zero()) t.d0[j01(g2, h)][i11(g, h)] = x.d1[g2][g];
  // d1 = [[dM1, dN1], [-dN0, dM0]]
  for (std::size_t h = 0; h < b0; ++h)
    for (std::size_t g = 0; g < a1; ++g)
      for (std::size_t g2 = 0; g2 < a0; ++g2)
        if (!x.d1[g2][g].is_zero()) t.d1[i00(g2, h)][j10(g, h)] = x.d1[g2][g];
  for (std::size_t g = 0; g < a0; ++g)
    for (std::size_t h = 0; h < b1; ++h)
      for (std::size_t h2 = 0; h2 < b0; ++h2)
        if (!y.d1[h2][h].is_zero()) t.d1[i00(g, h2)][j01(g, h)] = y.d1[h2][h];
  for (std::size_t g = 0; g < a1; ++g)
    for (std::size_t h = 0; h < b0; ++h)
      for (std::size_t h2 = 0; h2 < b1; ++h2)
        if (!y.d0[h2][h].is_zero()) t.d1[i11(g, h2)][j10(g, h)] = -y.d0[h2][h];
  for (std::size_t h = 0; h < b1; ++h)
    for (std::size_t g = 0; g < a0; ++g)
      for (std::size_t g2 = 0; g2 < a1; ++g2)
        if (!x.d0[g2][g].is_zero()) t.d1[i11(g2, h)][j01(g, h)] = x.d0[g2][g];
  return t;
}

MatrixFactorization translate(const MatrixFactorization& x) {
  MatrixFactorization t = x;
  std::swap(t.m0, t.m1);
  t.d0 = x.d1;
  t.d1 = x.d0;
  for (auto* m : {&t.d0, &t.d1})
    for (auto& row : *m)
      for (auto& e : row) e = -e;
  return t;
}

MatrixFactorization grade_shift(const MatrixFactorization& x, int n) {
  MatrixFactorization t = x;
  for (auto& s : t.m0.shifts) s += n;
  for (auto& s : t.m1.shifts) s += n;
  return t;
}

namespace {

void check_product(const Matrix& left, const Matrix& right, const Poly& w, const QuotientRing& ring,
                   const std::string& where, std::vector<Violation>& out) {
  const std::size_t n = right.empty() ? 0 : right[0].size();
  const std::size_t mid = right.size();
  std::vector<std::vector<std::size_t>> nz(n);
  for (std::size_t k = 0; k < mid; ++k)
    for (std::size_t c = 0; c < n; ++c)
      if (!right[k][c].is_zero()) nz[c].push_back(k);
  for (std::size_t r = 0; r < left.size(); ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Poly s;
      for (auto k : nz[c])
        if (!left[r][k].is_zero()) s += left[r][k] * right[k][c];
      if (r == c) s -= w;
      if (!ring.is_zero(s))
        out.push_back({where, static_cast<int>(r), static_cast<int>(c), "residue " + ring.normal_form(s).str()});
    }
}

}  // namespace

std::vector<Violation> validate(const MatrixFactorization& x) {
  std::vector<Violation> out;
  if (x.potential_degree % 2 != 0) out.push_back({"potential", -1, -1, "odd potential degree"});
  const int half = x.potential_degree / 2;
  if (!x.potential.is_zero() && x.potential.homogeneous_degree() != x.potential_degree)
    out.push_back({"potential", -1, -1, "not homogeneous of degree " + std::to_string(x.potential_degree)});
  if (x.d0.size() != x.rank1() || x.d1.size() != x.rank0()) out.push_back({"shape", -1, -1, "row count"});
  for (auto& row : x.d0)
    if (row.size() != x.rank0()) out.push_back({"shape", -1, -1, "d0 column count"});
  for (auto& row : x.d1)
    if (row.size() != x.rank1()) out.push_back({"shape", -1, -1, "d1 column count"});
  if (!out.empty()) return out;

  for (std::size_t h = 0; h < x.rank1(); ++h)
    for (std::size_t g = 0; g < x.rank0(); ++g) {
      const Poly& e = x.d0[h][g];
      int want = half + x.m0.shifts[g] - x.m1.shifts[h];
      if (!e.is_zero() && e.homogeneous_degree() != want)
        out.push_back({"d0", static_cast<int>(h), static_cast<int>(g),
                       "entry " + e.str() + " is not homogeneous of degree " + std::to_string(want)});
    }
  for (std::size_t g = 0; g < x.rank0(); ++g)
    for (std::size_t h = 0; h < x.rank1(); ++h) {
      const Poly& e = x.d1[g][h];
      int want = half + x.m1.shifts[h] - x.m0.shifts[g];
      if (!e.is_zero() && e.homogeneous_degree() != want)
        out.push_back({"d1", static_cast<int>(g), static_cast<int>(h),
                       "entry " + e.str() + " is not homogeneous of degree " + std::to_string(want)});
    }
  check_product(x.d1, x.d0, x.potential, *x.base, "d1*d0", out);
  check_product(x.d0, x.d1, x.potential, *x.base, "d0*d1", out);
  return out;
}

std::map<std::pair<int, int>, int> graded_ranks(const MatrixFactorization& x) {
  std::map<std::pair<int, int>, int> r;
  for (int s : x.m0.shifts) ++r[{0, s}];
  for (int s : x.m1.shifts) ++r[{1, s}];
  return r;
}

namespace {

nlohmann::json matrix_json(const Matrix& m) {
  auto j = nlohmann::json::array();
  for (auto& row : m) {
    auto r = nlohmann::json::array();
    for (auto& e : row) r.push_back(e.str());
    j.push_back(r);
  }
  return j;
}

}  // namespace

nlohmann::json to_json(const MatrixFactorization& x) {
  return {{"base", x.base->str()},
          {"potential", x.potential.str()},
          {"potential_degree", x.potential_degree},
          {"m0_shifts", x.m0.shifts},
          {"m1_shifts", x.m1.shifts},
          {"d0", matrix_json(x.d0)},
          {"d1", matrix_json(x.d1)}};
}

nlohmann::json to_json(const KoszulMF& k) {
  auto rows = nlohmann::json::array();
  for (auto& r : k.rows)
    rows.push_back({{"a", r.a.str()}, {"b", r.b.str()}, {"deg_a", r.deg_a}, {"deg_b", r.deg_b}});
  return {{"base", k.base->str()},
          {"rows", rows},
          {"shift", k.shift},
          {"z2", k.z2},
          {"potential_degree", k.potential_degree},
          {"potential", k.potential().str()}};
}

std::string to_text(const MatrixFactorization& x) {
  std::ostringstream os;
  os << "base " << x.base->str() << "\n";
  os << "potential " << x.potential.str() << "\n";
  os << "rank " << x.rank0() << " " << x.rank1() << "\n";
  os << "m0_shifts";
  for (int s : x.m0.shifts) os << " " << s;
  os << "\nm1_shifts";
  for (int s : x.m1.shifts) os << " " << s;
  os << "\n";
  auto dump = [&](const char* name, const Matrix& m) {
    for (std::size_t r = 0; r < m.size(); ++r)
      for (std::size_t c = 0; c < m[r].size(); ++c)
        if (!m[r][c].is_zero()) os << name << "[" << r << "][" << c << "] = " << m[r][c].str() << "\n";
  };
  dump("d0", x.d0);
  dump("d1", x.d1);
  return os.str();
}

std::string to_text(const KoszulMF& k) {
  std::ostringstream os;
  os << "base " << k.base->str() << "\n";
  os << "shift " << k.shift << "\n";
  os << "z2 " << k.z2 << "\n";
  for (std::size_t i = 0; i < k.rows.size(); ++i)
    os << "row " << i + 1 << ": (" << k.rows[i].a.str() << " ; " << k.rows[i].b.str() << ")\n";
  os << "potential " << k.potential().str() << "\n";
  return os.str();
}

}  // namespace moymf
