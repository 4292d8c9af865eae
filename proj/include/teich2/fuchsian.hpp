#pragma once

// Side-pairing generators of the Fuchsian group of the octagon, the defining
// relation, and shortest-word balls of the Cayley graph.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "teich2/hyperbolic.hpp"
#include "teich2/octagon.hpp"

namespace teich2 {

// Letters of the generating alphabet: letter 2k is g_k, letter 2k+1 is g_k^{-1}.
using Letter = std::uint8_t;
using Word = std::vector<Letter>;

inline constexpr int kLetterCount = 8;

inline constexpr Letter letter(int k, bool inverse = false) {
  return static_cast<Letter>(2 * k + (inverse ? 1 : 0));
}

// "e" for the empty word, otherwise e.g. "g0*g1^-1*g2".
std::string format_word(const Word& word);

struct GeneratorSet {
  std::array<Mobius, kLetterCount> letters;  // indexed by Letter
  double normalization;                     // N(a, alpha_tilde)

  const Mobius& g(int k) const { return letters[2 * k]; }
  const Mobius& g_inv(int k) const { return letters[2 * k + 1]; }
  const Mobius& operator[](Letter l) const { return letters[l]; }

  Mobius evaluate(const Word& word) const;
};

// Explicit g_0, g_1 in terms of (a, alpha_tilde); g_2, g_3 by conjugation with
// the quarter turn.
GeneratorSet generators(const OctagonParams& params);

// g_k = M(omega_k) M(omega_5).
GeneratorSet generators_from_m(const OctagonGeometry& geom);

// g_k = H(p_k) with p_k the side midpoints.
GeneratorSet generators_from_half_turns(const OctagonGeometry& geom);

// Largest projective distance between corresponding letters.
double max_projective_distance(const GeneratorSet& lhs, const GeneratorSet& rhs);

// g0 g1^-1 g2 g3^-1 g0^-1 g1 g2^-1 g3.
Word relator();

struct RelationReport {
  Mobius product;
  int sign;       // +1 or -1: which of +-identity the product is closest to
  double defect;  // max-norm distance to that identity
};

RelationReport relation_check(const GeneratorSet& gens);

// Residuals of g_{2,3} = R g_{0,1} R^-1 (quarter turn) and g_k^-1 = R_pi g_k R_pi^-1.
struct RotationReport {
  double quarter_turn_residual;
  double half_turn_inverse_residual;
};

RotationReport rotation_check(const GeneratorSet& gens);

struct SidePairingReport {
  std::array<double, 4> endpoint_residual{};  // g_k maps ends of s_{k+4} onto ends of s_k
  std::array<double, 4> midpoint_residual{};  // |g_k[-p_k] - p_k|
  std::size_t interior_samples = 0;
  std::size_t interior_violations = 0;  // g_k^{+-1}[z] landing inside F

  double max_residual() const;
  bool passed(double tolerance) const;
};

SidePairingReport side_pairing_check(const OctagonGeometry& geom, const GeneratorSet& gens,
                                     std::size_t interior_samples = 1000,
                                     std::uint64_t seed = 1);

struct BallElement {
  Mobius element;  // canonical sign
  Word word;       // lexicographically least shortest word
};

// Elements of word length <= radius, ordered by (length, word).
struct GroupBall {
  int radius = 0;
  std::vector<BallElement> elements;
  std::vector<std::size_t> sphere_sizes;  // sphere_sizes[n] = #elements of length n

  std::size_t size() const noexcept { return elements.size(); }
};

inline constexpr std::size_t kDefaultBallCapacity = 2'000'000;

// Breadth-first enumeration with projective dedup (relative tolerance on the
// entries). Throws CapacityError once more than `capacity` elements appear.
GroupBall ball(const GeneratorSet& gens, int radius, std::size_t capacity = kDefaultBallCapacity,
               double tolerance = 1e-9);

struct Cell {
  std::size_t element_index;
  std::array<Complex, 8> vertices;
};

// Images of the fundamental octagon under every ball element.
std::vector<Cell> cells(const GroupBall& group_ball, const OctagonGeometry& geom);

}  // namespace teich2
