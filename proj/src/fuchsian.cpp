#include "teich2/fuchsian.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

#include "teich2/errors.hpp"

namespace teich2 {

std::string format_word(const Word& word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i > 0) out += '*';
    out += 'g';
    out += static_cast<char>('0' + word[i] / 2);
    if (word[i] % 2 == 1) out += "^-1";
  }
  return out;
}

Mobius GeneratorSet::evaluate(const Word& word) const {
  Mobius m;
  for (Letter l : word) m = m * letters[l];
  return m;
}

namespace {

GeneratorSet complete(const Mobius& g0, const Mobius& g1, const Mobius& g2, const Mobius& g3,
                      double normalization) {
  GeneratorSet gens{{g0, g0.inverse(), g1, g1.inverse(), g2, g2.inverse(), g3, g3.inverse()},
                    normalization};
  return gens;
}

double normalization_factor(const OctagonParams& params) {
  const double a2 = params.a() * params.a();
  const double c = std::cos(params.alpha_tilde());
  return -c / std::sqrt((1.0 - a2) * (2.0 * a2 * c * c - 1.0));
}

}  // namespace

GeneratorSet generators(const OctagonParams& params) {
  const double a = params.a();
  const double a2 = a * a;
  const double t = std::tan(params.alpha_tilde());
  const double n = normalization_factor(params);

  const Mobius g0(Complex(n * a * (1.0 - t), 0.0), n * Complex(a2 - t, 1.0 - a2));
  const Mobius g1(Complex(n * a * (1.0 + t), 0.0), n * Complex(1.0 - a2, a2 + t));
  const Mobius r = rotation(0.5 * kPi);
  const Mobius r_inv = r.inverse();
  return complete(g0, g1, r * g0 * r_inv, r * g1 * r_inv, n);
}

GeneratorSet generators_from_m(const OctagonGeometry& geom) {
  const Mobius m5 = m_half_turn(geom.omega(5));
  std::array<Mobius, 4> g;
  for (int k = 0; k < 4; ++k) g[k] = m_half_turn(geom.omega(k)) * m5;
  return complete(g[0], g[1], g[2], g[3], normalization_factor(geom.params));
}

GeneratorSet generators_from_half_turns(const OctagonGeometry& geom) {
  std::array<Mobius, 4> g;
  for (int k = 0; k < 4; ++k) g[k] = half_turn(geom.side_midpoint(k));
  return complete(g[0], g[1], g[2], g[3], normalization_factor(geom.params));
}

double max_projective_distance(const GeneratorSet& lhs, const GeneratorSet& rhs) {
  double worst = 0.0;
  for (int l = 0; l < kLetterCount; ++l) {
    worst = std::max(worst, lhs.letters[l].projective_distance(rhs.letters[l]));
  }
  return worst;
}

Word relator() {
  return {letter(0), letter(1, true), letter(2), letter(3, true),
          letter(0, true), letter(1), letter(2, true), letter(3)};
}

RelationReport relation_check(const GeneratorSet& gens) {
  const Mobius product = gens.evaluate(relator());
  const double plus = product.distance_to_identity();
  const double minus = product.distance_to_minus_identity();
  return plus <= minus ? RelationReport{product, +1, plus} : RelationReport{product, -1, minus};
}

RotationReport rotation_check(const GeneratorSet& gens) {
  const Mobius quarter = rotation(0.5 * kPi);
  const Mobius half = rotation(kPi);
  RotationReport report{0.0, 0.0};
  for (int k = 0; k < 2; ++k) {
    report.quarter_turn_residual =
        std::max(report.quarter_turn_residual,
                 gens.g(k + 2).projective_distance(quarter * gens.g(k) * quarter.inverse()));
  }
  for (int k = 0; k < 4; ++k) {
    report.half_turn_inverse_residual =
        std::max(report.half_turn_inverse_residual,
                 gens.g_inv(k).projective_distance(half * gens.g(k) * half.inverse()));
  }
  return report;
}

double SidePairingReport::max_residual() const {
  double worst = 0.0;
  for (int k = 0; k < 4; ++k) {
    worst = std::max({worst, endpoint_residual[k], midpoint_residual[k]});
  }
  return worst;
}

bool SidePairingReport::passed(double tolerance) const {
  return max_residual() <= tolerance && interior_violations == 0;
}

SidePairingReport side_pairing_check(const OctagonGeometry& geom, const GeneratorSet& gens,
                                     std::size_t interior_samples, std::uint64_t seed) {
  SidePairingReport report;
  const auto& v = geom.vertices;
  for (int k = 0; k < 4; ++k) {
    const Mobius& g = gens.g(k);
    const Complex x = g.apply(v[k + 4].z());
    const Complex y = g.apply(v[(k + 5) % 8].z());
    const Complex p = v[k].z();
    const Complex q = v[k + 1].z();
    report.endpoint_residual[k] = std::min(std::max(std::abs(x - p), std::abs(y - q)),
                                           std::max(std::abs(x - q), std::abs(y - p)));
    const Complex mid = geom.side_midpoint(k).z();
    report.midpoint_residual[k] = std::abs(g.apply(-mid) - mid);
  }

  std::mt19937_64 rng(seed);
  const double reach = std::max(geom.params.a(), geom.b);
  std::uniform_real_distribution<double> coord(-reach, reach);
  while (report.interior_samples < interior_samples) {
    const Complex z(coord(rng), coord(rng));
    if (!geom.contains(z)) continue;
    ++report.interior_samples;
    for (Letter l = 0; l < kLetterCount; ++l) {
      if (geom.contains(gens[l].apply(z))) ++report.interior_violations;
    }
  }
  return report;
}

namespace {

// Near-duplicate lookup keyed on log(1 + |Re u|), which is sign invariant.
class ProjectiveIndex {
 public:
  explicit ProjectiveIndex(double tolerance) : tolerance_(tolerance) {}

  bool contains(const Mobius& m, const std::vector<BallElement>& store) const {
    const long long key = bucket(m);
    for (long long k = key - 1; k <= key + 1; ++k) {
      const auto it = buckets_.find(k);
      if (it == buckets_.end()) continue;
      for (std::size_t idx : it->second) {
        const Mobius& other = store[idx].element;
        const double scale = std::max({1.0, std::abs(m.u()), std::abs(m.v())});
        if (m.projective_distance(other) <= tolerance_ * scale) return true;
      }
    }
    return false;
  }

  void insert(const Mobius& m, std::size_t index) { buckets_[bucket(m)].push_back(index); }

 private:
  static long long bucket(const Mobius& m) {
    return static_cast<long long>(std::floor(std::log1p(std::abs(m.u().real())) * 1e7));
  }

  double tolerance_;
  std::unordered_map<long long, std::vector<std::size_t>> buckets_;
};

}  // namespace

GroupBall ball(const GeneratorSet& gens, int radius, std::size_t capacity, double tolerance) {
  if (radius < 0) throw DomainError("ball radius must be nonnegative");
  GroupBall result;
  result.radius = radius;
  result.elements.push_back({Mobius::identity(), {}});
  result.sphere_sizes.push_back(1);

  ProjectiveIndex index(tolerance);
  index.insert(Mobius::identity(), 0);

  std::size_t sphere_begin = 0;
  for (int n = 1; n <= radius; ++n) {
    const std::size_t sphere_end = result.elements.size();
    for (std::size_t i = sphere_begin; i < sphere_end; ++i) {
      for (Letter l = 0; l < kLetterCount; ++l) {
        const Word& word = result.elements[i].word;
        if (!word.empty() && (word.back() ^ 1) == l) continue;  // free reduction
        const Mobius m = (result.elements[i].element * gens[l]).canonical();
        if (index.contains(m, result.elements)) continue;
        if (result.elements.size() >= capacity) {
          throw CapacityError("group ball exceeds the configured capacity of " +
                              std::to_string(capacity) + " elements");
        }
        Word next = word;
        next.push_back(l);
        index.insert(m, result.elements.size());
        result.elements.push_back({m, std::move(next)});
      }
    }
    result.sphere_sizes.push_back(result.elements.size() - sphere_end);
    sphere_begin = sphere_end;
  }
  return result;
}

std::vector<Cell> cells(const GroupBall& group_ball, const OctagonGeometry& geom) {
  std::vector<Cell> out;
  out.reserve(group_ball.size());
  for (std::size_t i = 0; i < group_ball.size(); ++i) {
    Cell cell{i, {}};
    for (int k = 0; k < 8; ++k) {
      cell.vertices[k] = group_ball.elements[i].element.apply(geom.vertices[k].z());
    }
    out.push_back(cell);
  }
  return out;
}

}  // namespace teich2
