#pragma once

#include <optional>
#include <span>

#include "newt/model.hpp"
#include "newt/series.hpp"

namespace newt {

struct FiltrationConfig {
  long long degree = 60;       // truncation of the power-series ring
  long long degree_step = 6;   // raise until two consecutive verdicts agree
  long long degree_max = 78;
  long long cap = 400;         // reduction-loop step cap
};

// exact == false means the reported value is a certified lower bound only
// (the reduction loop hit its cap)
struct NodeWeight {
  long long value = 0;
  bool exact = true;
};

enum class Membership { In, Out, Inconclusive };

// Divisorial weight at one node: repeatedly subtract (g_n / f_n) * f while
// the principal parts divide, each step strictly raising the node weight.
// `stop_at` short-circuits once the weight is known to be >= stop_at.
// Throws PrecondError when g reduces to 0 (g is a multiple of f, so the
// weight is infinite).
NodeWeight div_weight(const Model& m, const LaurentPoly& g, int node, long long cap,
                      long long stop_at = -1);

// Order weight: same loop, but a step is taken only when the quotient has no
// negative exponents (the quotient is forced, so a negative exponent proves
// the current weight is final).
NodeWeight order_weight(const Model& m, const LaurentPoly& g, int node, long long cap,
                        long long stop_at = -1);

std::vector<NodeWeight> div_weights(const Model& m, const LaurentPoly& g, long long cap);
std::vector<NodeWeight> order_weights(const Model& m, const LaurentPoly& g, long long cap);

enum class Filtration { Divisorial, Order, Image };

Membership in_filtration(const Model& m, const LaurentPoly& g, std::span<const long long> k,
                         Filtration which, const FiltrationConfig& cfg);

// Representative of g's class with weight >= k at every node simultaneously;
// requires div(g) >= k and k in the equality cone.  Returns nullopt with a
// diagnostic when a cap is exhausted.
std::optional<LaurentPoly> lift(const Model& m, const LaurentPoly& g, std::span<const long long> k,
                                const FiltrationConfig& cfg, std::string* diagnostic = nullptr);

// dim of the monomial coalgebra below the staircase: #{u >= 0 : some l_n(u) < k_n}
long long hilbert_ghat(const Model& m, std::span<const long long> k);

struct HilbertValue {
  long long dim = 0;
  bool certified = false;
};

// codimension of the image filtration at k, by exact linear algebra in the
// truncated ring, stabilized over two degree increments
HilbertValue hilbert_image(const Model& m, std::span<const long long> k, const FiltrationConfig& cfg);

// Hilbert series of hilbert_ghat / hilbert_image over a box of indices
// (entry at key k holds the value at k+1 pointwise, so exponents start at 0)
MultiSeries hilbert_ghat_series(const Model& m, const Box& box);
MultiSeries hilbert_image_series(const Model& m, const Box& box, const FiltrationConfig& cfg);

}  // namespace newt
