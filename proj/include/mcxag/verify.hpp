#pragma once

#include <mcxag/anf.hpp>
#include <mcxag/xag.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mcxag
{

/*! \brief f_i(x) = AND of all x_j with j != i, evaluated directly. */
std::vector<bool> reference_f( std::vector<bool> const& input );

/*! \brief As above; throws unless `input` has exactly n entries. */
std::vector<bool> reference_f( unsigned n, std::vector<bool> const& input );

/*! \brief Truth tables of f_1..f_n by direct evaluation of every input. */
std::vector<truth_table> reference_tables( unsigned n );

/*! \brief The single-monomial ANF of f_i. */
anf reference_anf( unsigned n, unsigned i );

enum class check_mode
{
  exhaustive,
  sampled
};

std::string_view to_string( check_mode mode );

struct mismatch
{
  std::vector<bool> input; /* entry j-1 is x_j */
  std::size_t output{ 0u }; /* 0-based output index */
  bool expected{ false };
  bool got{ false };
};

/*! \brief Reports keep at most this many mismatches; `mismatch_total` counts all. */
inline constexpr std::size_t max_reported_mismatches = 32u;

struct verification_report
{
  check_mode mode{ check_mode::exhaustive };
  std::size_t samples{ 0u }; /* random samples, sampled mode only */
  std::uint64_t seed{ 0u };
  unsigned arity{ 0u };
  std::uint64_t inputs_checked{ 0u };
  std::size_t outputs_checked{ 0u };
  std::vector<mismatch> mismatches;
  std::uint64_t mismatch_total{ 0u };
  std::size_t and_count_observed{ 0u };
  std::optional<std::size_t> and_count_expected;
  bool passed{ false };
};

/*! \brief Compares every output against f on all 2^n inputs (n <= 24). */
verification_report check_exhaustive( circuit const& c, std::optional<std::size_t> expected_and_count = std::nullopt );

/*! \brief Compares against f on the n+2 structured inputs plus `count` random ones.

  The structured inputs are all-ones, all-zeros, and each single-zero input;
  f is non-zero only on n+1 of the 2^n inputs, so uniform sampling alone
  rarely exercises the interesting rows.  Random inputs come from
  std::mt19937_64 seeded with `seed`: one 64-bit draw per variable per
  batch of 64 samples, variables in order x_1..x_n.
*/
verification_report check_sampled( circuit const& c, std::size_t count, std::uint64_t seed,
                                   std::optional<std::size_t> expected_and_count = std::nullopt );

/*! \brief Batches of 64 inputs used by check_sampled, one word per variable.

  Exposed so that differential tests can feed the same inputs to several
  circuits.  `lanes[b]` is the number of valid lanes in batch b.
*/
struct sample_batches
{
  std::vector<std::vector<std::uint64_t>> words;
  std::vector<unsigned> lanes;
};

sample_batches make_sample_batches( unsigned n, std::size_t count, std::uint64_t seed );

/*! \brief ANF of every gate, propagated symbolically through the circuit. */
std::vector<anf> symbolic_anfs( circuit const& c );

/*! \brief Rank over GF(2) of the rows, each a bit mask of at most 64 columns. */
std::size_t gf2_rank( std::vector<std::uint64_t> rows );

struct lemma_check
{
  std::string lemma;
  unsigned n{ 0u };
  unsigned i{ 0u }; /* index within the lemma, 0 when not applicable */
  bool passed{ false };
  std::string detail;
};

/*! \brief Symbolic checks of the construction for every n in 3..n_max.

  Lemma names:
  - `sigma_even_step`, `sigma_odd_recursion`: the stage-1 recursions yield
    the XOR of all degree-(k-1) monomials with k-2 AND gates
  - `pair_product`: (x_i ^ x_{i+1}) * s_0^n keeps exactly the monomials
    missing x_i and x_{i+1}, symbolically and in the circuit
  - `even_last_output`: s_0^{n-1} * (x_1 ^ ... ^ x_{n-1}) = x_1...x_{n-1}
  - `linear_independence`: s_0^n and the stage-2 outputs have rank n
  - `first_output`, `output_chain`: the stage-3 formulas
  - `stage_budget`: n-2, n-1 and 0 AND gates in stages 1, 2 and 3
*/
std::vector<lemma_check> check_lemma_suite( unsigned n_max );

} // namespace mcxag
