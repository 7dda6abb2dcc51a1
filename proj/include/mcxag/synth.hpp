#pragma once

#include <mcxag/anf.hpp>
#include <mcxag/xag.hpp>

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace mcxag
{

/*! \brief Circuits for the n leave-one-out products f_i = AND_{j != i} x_j.

  `optimal` uses 2n-3 AND gates in three stages:

  1. s_0^n, the XOR of all degree-(n-1) monomials, with n-2 ANDs;
  2. n-1 further products whose ANFs, together with s_0^n, span all
     degree-(n-1) monomials;
  3. XOR recombination into f_1..f_n.

  `baseline` combines prefix and suffix products and uses 3n-6 AND gates.
*/
enum class construction
{
  optimal,
  baseline
};

std::string_view to_string( construction c );
construction parse_construction( std::string_view name );

/*! \brief Smallest n handled by the constructions. */
inline constexpr unsigned min_arity = 3u;

struct labeled_node
{
  std::string label;
  gate_id node;
};

/*! \brief Cumulative XORs x_1 ^ ... ^ x_k, built once as a left chain. */
class xor_prefixes
{
public:
  explicit xor_prefixes( circuit_builder& builder );

  gate_id upto( unsigned k );

private:
  circuit_builder* builder_;
  std::vector<gate_id> prefix_; /* prefix_[k-1] covers x_1..x_k */
};

struct stage1_nodes
{
  gate_id sigma;                       /* s_0^n */
  std::optional<gate_id> sigma_before; /* s_0^{n-1}, even n only */
  std::vector<labeled_node> chain;     /* s_0^3, s_0^5, ..., s_0^n */
};

struct stage2_nodes
{
  /* pair_products[i-1] is s_i^n = (x_i ^ x_{i+1}) & s_0^n */
  std::vector<gate_id> pair_products;
  std::optional<gate_id> last_output; /* f_n, even n only */
};

/*! \brief Stage 1: s_0^n with n-2 AND gates.

  Odd n follows s_0^n = s_0^{n-2} & (((x_{n-1} ^ x_n) & (x_1 ^ ... ^ x_{n-1})) ^ x_{n-1})
  from the base s_0^3 = ((x_1 ^ x_2) & (x_2 ^ x_3)) ^ x_2.  Even n builds
  s_0^{n-1} that way and multiplies it by x_1 ^ ... ^ x_n; the odd node is
  kept for stage 2.  Requires the INPUT gates x_1..x_n in `builder`.
*/
stage1_nodes build_sigma( unsigned n, circuit_builder& builder, xor_prefixes& prefixes );
stage1_nodes build_sigma( unsigned n, circuit_builder& builder );

/*! \brief Stage 2: n-1 AND gates.

  Odd n: s_i^n for i = 1..n-1.  Even n: s_i^n for i = 1..n-2 and
  f_n = s_0^{n-1} & (x_1 ^ ... ^ x_{n-1}).
*/
stage2_nodes build_stage2( unsigned n, circuit_builder& builder, xor_prefixes& prefixes, stage1_nodes const& stage1 );

/*! \brief Stage 3: XOR-only recombination, returns f_1..f_n in index order. */
std::vector<gate_id> build_stage3( unsigned n, circuit_builder& builder, stage1_nodes const& stage1, stage2_nodes const& stage2 );

struct synthesis_plan
{
  unsigned n{ 0u };
  construction kind{ construction::optimal };
  circuit result{ 0u, {}, {} };
  std::vector<labeled_node> intermediates;
  /* AND gates added by each stage on a fresh builder (baseline: prefix, suffix, combine) */
  std::array<std::size_t, 3> stage_ands{};

  /*! \brief Node of an intermediate such as "s_0^5", "s_2^5" or "f_6"; throws if absent. */
  gate_id node( std::string_view label ) const;
};

synthesis_plan plan( unsigned n, construction kind );
circuit synthesize( unsigned n, construction kind );

/*! \brief 2n-3 for `optimal`, 3n-6 for `baseline`. */
std::size_t expected_and_count( unsigned n, construction kind );

/*! \brief max(deg(f) - 1, 0), a lower bound on the AND count of any circuit for f. */
unsigned degree_lower_bound( anf const& f );

} // namespace mcxag
