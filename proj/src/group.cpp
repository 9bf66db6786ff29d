#include "hyperharm/group.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <tuple>

#include "hyperharm/errors.hpp"

namespace hyperharm {

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += " ";
    s += names.at(w[i] / 2);
    if (w[i] & 1) s += "^-1";
  }
  return s;
}

MoebiusMap GroupPresentation::letter(int l) const {
  const MoebiusMap& g = generators.at(l / 2);
  return (l & 1) ? g.inverse() : g;
}

MoebiusMap GroupPresentation::pairing_letter(int l) const {
  const MoebiusMap& g = side_pairings.at(l / 2);
  return (l & 1) ? g.inverse() : g;
}

MoebiusMap GroupPresentation::evaluate(const Word& w) const {
  MatrixModel mm = generators.empty() ? MatrixModel::SU11 : generators.front().matrix_model();
  MoebiusMap m = MoebiusMap::identity(mm);
  for (int l : w) m = m * letter(l);
  return m;
}

Word GroupPresentation::relation() const {
  Word w;
  for (int i = 0; i < genus; ++i) {
    int a = 4 * i, b = 4 * i + 2;
    w.insert(w.end(), {a, b, inverse_letter(a), inverse_letter(b)});
  }
  return w;
}

double GroupPresentation::relation_residual() const {
  MoebiusMap r = evaluate(relation());
  return r.distance(MoebiusMap::identity(r.matrix_model()));
}

std::vector<std::string> GroupPresentation::generator_names() const {
  std::vector<std::string> names;
  for (int i = 1; i <= genus; ++i) {
    names.push_back("a" + std::to_string(i));
    names.push_back("b" + std::to_string(i));
  }
  return names;
}

void GroupPresentation::validate() const {
  if (genus < 1 || static_cast<int>(generators.size()) != 2 * genus)
    throw Error(ErrorCode::InvalidArgument, "presentation needs 2g generators");
  for (const auto& g : generators)
    if (g.matrix_model() != generators.front().matrix_model())
      throw Error(ErrorCode::InvalidArgument, "generators must share one matrix model");
  if (side_pairings.size() != side_pairing_words.size())
    throw Error(ErrorCode::InvalidArgument, "each side pairing needs a word in the generators");
  double res = relation_residual();
  if (res > 1e-9) throw Error(ErrorCode::ConstructionFailed, "relation residual " + std::to_string(res));
}

GroupPresentation octagon_group() {
  const double r2 = std::sqrt(2.0);
  const double diag = 1.0 + r2;
  const double off = std::sqrt(2.0 + 2.0 * r2);
  std::vector<MoebiusMap> g;
  for (int k = 0; k < 4; ++k) g.push_back(MoebiusMap::su11(diag, std::polar(off, std::numbers::pi * k / 4.0)));
  GroupPresentation p;
  p.genus = 2;
  // a1 = g0, b1 = g3, a2 = g2 g1^-1, b2 = g0 g3 g1^-1
  p.generators = {g[0], g[3], g[2] * g[1].inverse(), g[0] * g[3] * g[1].inverse()};
  p.side_pairings = g;
  // g1 = b2^-1 a1 b1, g2 = a2 b2^-1 a1 b1
  p.side_pairing_words = {{0}, {7, 0, 2}, {4, 7, 0, 2}, {2}};
  double res = p.relation_residual();
  if (res > 1e-9) throw Error(ErrorCode::ConstructionFailed, "octagon relation residual " + std::to_string(res));
  for (std::size_t k = 0; k < g.size(); ++k) {
    if (p.evaluate(p.side_pairing_words[k]).distance(g[k]) > 1e-9)
      throw Error(ErrorCode::ConstructionFailed, "side pairing word mismatch");
  }
  return p;
}

std::uint64_t reduced_word_count(int generators, int max_len) {
  std::uint64_t total = 1, layer = 1;
  for (int n = 1; n <= max_len; ++n) {
    layer = n == 1 ? 2ULL * generators : layer * (2ULL * generators - 1);
    total += layer;
  }
  return total;
}

namespace {

void dfs_words(const std::vector<MoebiusMap>& letters, int max_len, Word& word, const MoebiusMap& m,
               const std::function<void(const Word&, const MoebiusMap&)>& visit) {
  visit(word, m);
  if (static_cast<int>(word.size()) == max_len) return;
  for (int l = 0; l < static_cast<int>(letters.size()); ++l) {
    if (!word.empty() && l == inverse_letter(word.back())) continue;
    word.push_back(l);
    dfs_words(letters, max_len, word, m * letters[l], visit);
    word.pop_back();
  }
}

std::vector<MoebiusMap> with_inverses(const std::vector<MoebiusMap>& gens) {
  std::vector<MoebiusMap> out;
  for (const auto& g : gens) {
    out.push_back(g);
    out.push_back(g.inverse());
  }
  return out;
}

std::tuple<long long, long long, long long, long long> element_key(const MoebiusMap& m) {
  double s = 1e6 / std::max(1.0, std::abs(m.a()));
  return {std::llround(m.a().real() * s), std::llround(m.a().imag() * s), std::llround(m.b().real() * s),
          std::llround(m.b().imag() * s)};
}

}  // namespace

void enumerate_words(const std::vector<MoebiusMap>& gens, int max_len,
                     const std::function<void(const Word&, const MoebiusMap&)>& visit, std::uint64_t cap) {
  if (max_len < 0) throw Error(ErrorCode::InvalidArgument, "word length must be >= 0");
  if (gens.empty()) throw Error(ErrorCode::InvalidArgument, "no generators");
  if (reduced_word_count(static_cast<int>(gens.size()), max_len) > cap)
    throw Error(ErrorCode::TruncationTooLarge, "word count exceeds the cap");
  std::vector<MoebiusMap> letters = with_inverses(gens);
  Word word;
  dfs_words(letters, max_len, word, MoebiusMap::identity(gens.front().matrix_model()), visit);
}

WordCensus word_census(const GroupPresentation& g, int max_len, bool count_distinct) {
  WordCensus c;
  c.min_trace_squared = INFINITY;
  std::vector<MoebiusMap> seen;
  std::map<std::tuple<long long, long long, long long, long long>, int> keys;
  enumerate_words(g.generators, max_len, [&](const Word& w, const MoebiusMap& m) {
    ++c.words;
    if (w.empty()) return;
    IsometryClass cls = m.classify();
    if (cls == IsometryClass::Identity) {
      ++c.identity_words;
    } else {
      if (cls != IsometryClass::Hyperbolic) ++c.non_hyperbolic;
      c.min_trace_squared = std::min(c.min_trace_squared, m.trace_squared());
    }
    if (count_distinct) keys[element_key(m)]++;
  });
  if (count_distinct) c.distinct_elements = keys.size() + 1;  // plus the identity word
  return c;
}

Reduction reduce_to_domain(const GroupPresentation& g, Complex w, int max_steps) {
  if (!g.has_side_pairings()) throw Error(ErrorCode::InvalidArgument, "reduction needs side pairings");
  if (!(std::abs(w) < 1.0)) throw Error(ErrorCode::DomainViolation, "reduction needs |w| < 1");
  const int nl = 2 * static_cast<int>(g.side_pairings.size());
  std::vector<MoebiusMap> letters;
  for (int l = 0; l < nl; ++l) letters.push_back(g.pairing_letter(l));
  Reduction r{w, MoebiusMap::identity(MatrixModel::SU11), {}};
  for (int step = 0; step < max_steps; ++step) {
    double cur = std::abs(r.point);
    int best = -1;
    double best_abs = cur;
    Complex best_pt;
    for (int l = 0; l < nl; ++l) {
      Complex p = letters[l].apply(r.point);
      double a = std::abs(p);
      if (a < best_abs - 1e-14) {
        best = l;
        best_abs = a;
        best_pt = p;
      }
    }
    if (best < 0) return r;
    r.point = best_pt;
    r.element = letters[best] * r.element;
    r.letters.push_back(best);
  }
  throw Error(ErrorCode::ConstructionFailed, "reduction did not terminate");
}

Word pairing_word(const GroupPresentation& g, const MoebiusMap& m) {
  Reduction r = reduce_to_domain(g, m.apply(Complex(0.0)));
  Word w;
  for (int l : r.letters) w.push_back(inverse_letter(l));
  MoebiusMap check = MoebiusMap::identity(MatrixModel::SU11);
  for (int l : w) check = check * g.pairing_letter(l);
  if (check.distance(m) > 1e-8) throw Error(ErrorCode::ConstructionFailed, "element is not a word in the side pairings");
  return w;
}

HalfPlaneReducer::HalfPlaneReducer(const GroupPresentation& g) {
  if (!g.has_side_pairings()) throw Error(ErrorCode::InvalidArgument, "reduction needs side pairings");
  for (int l = 0; l < 2 * static_cast<int>(g.side_pairings.size()); ++l)
    letters_.push_back(to_half_plane(g.pairing_letter(l)));
}

Reduction HalfPlaneReducer::reduce(Complex z, int max_steps) const {
  if (!(z.imag() > 0.0)) throw Error(ErrorCode::DomainViolation, "reduction needs Im z > 0");
  // 2 cosh d(i, u) = (|u|^2 + 1) / Im u
  auto cost = [](Complex u) { return (std::norm(u) + 1.0) / u.imag(); };
  Reduction r{z, MoebiusMap::identity(MatrixModel::SL2R), {}};
  double cur = cost(z);
  for (int step = 0; step < max_steps; ++step) {
    int best = -1;
    double best_cost = cur;
    Complex best_pt;
    for (int l = 0; l < static_cast<int>(letters_.size()); ++l) {
      Complex p = letters_[l].apply(r.point);
      double c = cost(p);
      if (c < best_cost * (1.0 - 1e-14)) {
        best = l;
        best_cost = c;
        best_pt = p;
      }
    }
    if (best < 0) return r;
    r.point = best_pt;
    r.element = letters_[best] * r.element;
    r.letters.push_back(best);
    cur = best_cost;
  }
  throw Error(ErrorCode::ConstructionFailed, "reduction did not terminate");
}

namespace {

// True if the greedy reduction of g(0) starts by applying inverse(l), i.e. if
// prepending l to a canonical word keeps it canonical.
bool canonical_prefix(const std::vector<MoebiusMap>& letters, const MoebiusMap& g, int l) {
  double best = std::norm(g.a());
  int arg = -1;
  for (int k = 0; k < static_cast<int>(letters.size()); ++k) {
    const MoebiusMap& s = letters[k];
    Complex a = s.a() * g.a() + s.b() * g.c();
    double v = std::norm(a);
    if (v < best * (1.0 - 1e-9)) {
      best = v;
      arg = k;
    }
  }
  return arg == inverse_letter(l);
}

void dfs_elements(const std::vector<MoebiusMap>& letters, int max_len, Word& word, const MoebiusMap& g,
                  const std::function<void(const Word&, const MoebiusMap&)>& visit, std::uint64_t& count,
                  std::uint64_t cap) {
  if (++count > cap) throw Error(ErrorCode::TruncationTooLarge, "element count exceeds the cap");
  visit(word, g);
  if (static_cast<int>(word.size()) == max_len) return;
  for (int l = 0; l < static_cast<int>(letters.size()); ++l) {
    if (!word.empty() && l == inverse_letter(word.front())) continue;
    MoebiusMap next = letters[l] * g;
    if (!canonical_prefix(letters, next, l)) continue;
    word.insert(word.begin(), l);
    dfs_elements(letters, max_len, word, next, visit, count, cap);
    word.erase(word.begin());
  }
}

}  // namespace

void enumerate_elements(const GroupPresentation& g, int max_len,
                        const std::function<void(const Word&, const MoebiusMap&)>& visit, std::uint64_t cap) {
  if (!g.has_side_pairings()) throw Error(ErrorCode::InvalidArgument, "element enumeration needs side pairings");
  if (max_len < 0) throw Error(ErrorCode::InvalidArgument, "word length must be >= 0");
  int nl = 2 * static_cast<int>(g.side_pairings.size());
  if (reduced_word_count(nl / 2, max_len) > cap)
    throw Error(ErrorCode::TruncationTooLarge, "word count exceeds the cap");
  std::vector<MoebiusMap> letters;
  for (int l = 0; l < nl; ++l) letters.push_back(g.pairing_letter(l));
  Word word;
  std::uint64_t count = 0;
  dfs_elements(letters, max_len, word, MoebiusMap::identity(MatrixModel::SU11), visit, count, cap);
}

std::vector<MoebiusMap> group_ball(const GroupPresentation& g, int max_len) {
  std::vector<MoebiusMap> out;
  enumerate_elements(g, max_len, [&](const Word&, const MoebiusMap& m) { out.push_back(m); });
  return out;
}

namespace {

using M2 = Eigen::Matrix2cd;

M2 to_matrix(const MoebiusMap& m) {
  M2 r;
  r << m.a(), m.b(), m.c(), m.d();
  return r;
}

M2 expm_traceless(const M2& x) {
  Complex delta = x(0, 0) * x(0, 0) + x(0, 1) * x(1, 0);
  Complex s = std::sqrt(delta);
  Complex c = std::cosh(s);
  Complex sh = std::abs(s) < 1e-8 ? Complex(1.0) + delta / 6.0 : std::sinh(s) / s;
  return c * M2::Identity() + sh * x;
}

std::array<M2, 3> lie_basis(MatrixModel model) {
  std::array<M2, 3> e;
  if (model == MatrixModel::SL2R) {
    e[0] << 1, 0, 0, -1;
    e[1] << 0, 1, 0, 0;
    e[2] << 0, 0, 1, 0;
  } else {
    e[0] << kI, 0, 0, -kI;
    e[1] << 0, 1, 1, 0;
    e[2] << 0, kI, -kI, 0;
  }
  return e;
}

bool same_point(const ExtendedPoint& p, const ExtendedPoint& q) {
  if (p.is_infinity() || q.is_infinity()) return p.is_infinity() && q.is_infinity();
  return std::abs(p.value() - q.value()) < 1e-9;
}

}  // namespace

int commutator_rank(const MoebiusMap& a, const MoebiusMap& b, double h) {
  if (a.matrix_model() != b.matrix_model()) throw Error(ErrorCode::InvalidArgument, "maps of different models");
  if (a.classify() != IsometryClass::Hyperbolic || b.classify() != IsometryClass::Hyperbolic)
    throw Error(ErrorCode::InvalidArgument, "commutator_rank expects hyperbolic maps");
  M2 A = to_matrix(a), B = to_matrix(b);
  double scale = std::max(1.0, A.norm() * B.norm());
  if ((A * B - B * A).norm() < 1e-10 * scale) throw Error(ErrorCode::CommutingInputs, "A and B commute");
  for (const auto& p : a.fixed_points())
    for (const auto& q : b.fixed_points())
      if (same_point(p, q)) throw Error(ErrorCode::CommutingInputs, "A and B share a fixed point");

  auto basis = lie_basis(a.matrix_model());
  auto comm = [&](const M2& x, const M2& y) { return M2(x * y * x.inverse() * y.inverse()); };
  M2 r0inv = comm(A, B).inverse();
  Eigen::Matrix<double, 8, 3> coord;
  for (int k = 0; k < 3; ++k) {
    for (int e = 0; e < 4; ++e) {
      coord(2 * e, k) = basis[k](e / 2, e % 2).real();
      coord(2 * e + 1, k) = basis[k](e / 2, e % 2).imag();
    }
  }
  auto qr = coord.colPivHouseholderQr();
  Eigen::Matrix<double, 3, 6> jac;
  for (int j = 0; j < 6; ++j) {
    M2 x = basis[j % 3];
    auto r_at = [&](double t) {
      M2 ap = j < 3 ? M2(A * expm_traceless(t * x)) : A;
      M2 bp = j < 3 ? B : M2(B * expm_traceless(t * x));
      return M2(comm(ap, bp) * r0inv);
    };
    M2 d = (r_at(h) - r_at(-h)) / (2.0 * h);
    Eigen::Matrix<double, 8, 1> v;
    for (int e = 0; e < 4; ++e) {
      v(2 * e) = d(e / 2, e % 2).real();
      v(2 * e + 1) = d(e / 2, e % 2).imag();
    }
    jac.col(j) = qr.solve(v);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(jac);
  auto sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > 1e-6 * sv(0)) ++rank;
  return rank;
}

}  // namespace hyperharm
