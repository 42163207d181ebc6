#pragma once

#include <array>
#include <string>
#include <vector>

#include "dyb/dybm.hpp"

namespace dyb {

/// Matrix of the shift operator T_a, (T_a f)(l) = f(l a), on the
/// delta-function basis of maps Q -> K.  m[i][j] = 1 iff T_a(delta_j) =
/// delta_i, i.e. iff i * a = j.  Always a permutation matrix.
std::vector<std::vector<int>> shift_operator(const Quasigroup& q, int a);

/// The indicator functions attached to a dynamical map: for (x, y, a, c),
/// the function of lambda that is 1 exactly when sigma(lambda)(x, y) =
/// (a, c).  Exactly n^3 of the n^5 values are 1; stored as the forward
/// table plus an inverse index from (a, c) to its preimages.
class SigmaIndicator {
  public:
    explicit SigmaIndicator(const DynamicalMap& sigma);

    int size() const { return n_; }
    bool value(int x, int y, int a, int c, int lambda) const;
    /// All (lambda, x, y) with sigma(lambda)(x, y) = (a, c), sorted.
    const std::vector<std::array<int, 3>>& preimages(int a, int c) const;

  private:
    int n_;
    std::vector<std::vector<std::array<int, 3>>> inv_;  // (a*n + c) -> triples
    std::vector<std::int32_t> a_, c_;                   // forward tables
};

/// Generators of the presentation: basis elements B(i,j) of the
/// coefficient algebra (delta_i tensor delta_j), and the L / Linv
/// indeterminates.
struct GenId {
    enum class Kind { B, L, Linv };
    Kind kind;
    int i, j;

    std::string name() const;
    friend bool operator==(const GenId& a, const GenId& b) {
        return a.kind == b.kind && a.i == b.i && a.j == b.j;
    }
};

/// A term of a relation: an exact rational coefficient times a word in
/// the generators (indices into Presentation::generators; the empty word
/// is the algebra unit).
struct PresTerm {
    long long num = 0;
    long long den = 1;
    std::vector<int> gens;
};

struct PresRelation {
    int family = 0;  // 1..5
    std::vector<PresTerm> terms;
};

/// Generators-and-relations presentation of the bialgebroid attached to a
/// dynamical map, with the coefficient algebra realized on its delta
/// basis:
///   family 1: products B(i,j)B(i',j') = [i=i'][j=j'] B(i,j), plus one
///             unit-decomposition relation per basis element;
///   family 2: L Linv and Linv L summing to delta * empty-word;
///   family 3: shift-exchange relations between coefficient functions and
///             L / Linv, one per (a, b, basis function);
///   family 4: exchange relations between L generators weighted by the
///             indicator functions of the map;
///   family 5: empty word = decomposition of the unit of the coefficient
///             algebra.
/// Ordering is deterministic: family, then lexicographic indices.
struct Presentation {
    int n = 0;
    std::vector<GenId> generators;
    std::vector<PresRelation> relations;

    int count_family(int family) const;
    friend bool operator==(const Presentation& a, const Presentation& b);
};

/// Emits the presentation.  Requires the map to pass check_bijective
/// (PrerequisiteFailed otherwise), so the Linv relations are consistent.
Presentation emit_presentation(const Quasigroup& q, const DynamicalMap& sigma);

/// lambda-indexed set maps on tuples of basis vectors of the graded vector
/// space spanned by Q, i.e. morphisms of tensor powers that send basis
/// vectors to basis vectors.  The grade of a basis tuple (q1, ..., qk) is
/// the permutation l -> ((l q1) q2) ... qk.
struct GradedSetMap {
    int n = 0;
    int arity = 0;
    // at[lambda][flattened input tuple] = flattened output tuple
    std::vector<std::vector<std::int32_t>> at;
};

GradedSetMap graded_identity(const Quasigroup& q, int arity);
GradedSetMap graded_sigma(const DynamicalMap& sigma);
/// Tensor product of morphisms: the left factor is evaluated at the
/// parameter shifted by the grade of the basis tuple the right factor
/// consumes.
GradedSetMap graded_tensor(const Quasigroup& q, const GradedSetMap& f, const GradedSetMap& g);
/// Pointwise-in-lambda composition, f after g.
GradedSetMap graded_compose(const GradedSetMap& f, const GradedSetMap& g);

/// Braid relation of the fundamental object: assembles both sides of
///   (sigma x id)(id x sigma)(sigma x id) = (id x sigma)(sigma x id)(id x sigma)
/// from the graded tensor calculus and compares them as lambda-indexed set
/// maps on triples; witness [lambda, x, y, z].  Agrees with check_dybe on
/// every table.
Report check_fundamental_L(const DynamicalMap& sigma);

/// Grading compatibility of the map itself: for every lambda and basis
/// pair (u, v) with image (a, c), the grades match at lambda, i.e.
/// (lambda c) a = (lambda v) u; witness [lambda, u, v].
Report check_sigma_morphism(const DynamicalMap& sigma);

}  // namespace dyb
