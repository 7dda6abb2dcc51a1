#include <mcxag/verify.hpp>

#include <mcxag/synth.hpp>

#include <algorithm>
#include <array>
#include <bit>
#include <random>
#include <stdexcept>

namespace mcxag
{

namespace
{

constexpr unsigned lanes_per_word = 64u;

void require_outputs_match_arity( circuit const& c )
{
  if ( c.num_outputs() != c.arity() )
  {
    throw std::invalid_argument( "circuit has " + std::to_string( c.num_outputs() ) + " outputs but f has " + std::to_string( c.arity() ) );
  }
}

void record( verification_report& report, std::vector<bool> input, std::size_t output, bool expected, bool got )
{
  ++report.mismatch_total;
  if ( report.mismatches.size() < max_reported_mismatches )
  {
    report.mismatches.push_back( mismatch{ std::move( input ), output, expected, got } );
  }
}

void finish( verification_report& report, circuit const& c, std::optional<std::size_t> expected_and_count )
{
  report.and_count_observed = c.and_count();
  report.and_count_expected = expected_and_count;
  report.passed = report.mismatch_total == 0u &&
                  ( !expected_and_count || *expected_and_count == report.and_count_observed );
}

std::vector<bool> bits_of( std::uint64_t x, unsigned n )
{
  std::vector<bool> bits( n );
  for ( unsigned j = 0; j < n; ++j )
  {
    bits[j] = ( x >> j ) & 1u;
  }
  return bits;
}

/* XOR of the k monomials of degree k-1 over x_1..x_k, in the given arity */
anf sigma_anf( unsigned arity, unsigned k )
{
  std::vector<monomial> terms;
  std::vector<unsigned> vars;
  for ( unsigned missing = 1; missing <= k; ++missing )
  {
    vars.clear();
    for ( unsigned j = 1; j <= k; ++j )
    {
      if ( j != missing )
      {
        vars.push_back( j );
      }
    }
    terms.push_back( monomial::of( arity, vars ) );
  }
  return anf( arity, std::move( terms ) );
}

anf pair_product_anf( unsigned n, unsigned i )
{
  return anf::xor_of_variables( n, { i, i + 1u } ) * sigma_anf( n, n );
}

anf expected_pair_product( unsigned n, unsigned i )
{
  return anf( n, { monomial::all_but( n, i ), monomial::all_but( n, i + 1u ) } );
}

std::string mismatch_detail( anf const& got, anf const& expected )
{
  return "got " + got.to_string() + ", expected " + expected.to_string();
}

/* bit (k-1) set iff the degree-(n-1) monomial missing x_k is present; nullopt if other terms appear */
std::optional<std::uint64_t> top_degree_row( anf const& a )
{
  auto const n = a.arity();
  std::uint64_t row = 0u;
  for ( auto const& m : a.terms() )
  {
    if ( m.degree() + 1u != n )
    {
      return std::nullopt;
    }
    for ( unsigned k = 1; k <= n; ++k )
    {
      if ( !m.contains( k ) )
      {
        row |= std::uint64_t{ 1 } << ( k - 1u );
      }
    }
  }
  return row;
}

void check_one_arity( unsigned n, std::vector<lemma_check>& out )
{
  auto add = [&]( std::string lemma, unsigned i, bool passed, std::string detail ) {
    out.push_back( lemma_check{ std::move( lemma ), n, i, passed, passed ? std::string{} : std::move( detail ) } );
  };

  auto const p = plan( n, construction::optimal );
  auto const anfs = symbolic_anfs( p.result );
  auto node_anf = [&]( std::string const& label ) -> anf const& { return anfs[p.node( label ).index]; };
  bool const even = n % 2u == 0u;

  /* stage 1 */
  circuit_builder fresh( n );
  fresh.inputs();
  build_sigma( n, fresh );
  for ( unsigned k = 3; k <= n; ++k )
  {
    bool const on_chain = k % 2u == 1u || k == n;
    if ( !on_chain )
    {
      continue;
    }
    auto const& got = node_anf( "s_0^" + std::to_string( k ) );
    auto const expected = sigma_anf( n, k );
    bool ok = got == expected;
    std::string detail = mismatch_detail( got, expected );
    if ( k == n && fresh.num_ands() != n - 2u )
    {
      ok = false;
      detail = "stage 1 used " + std::to_string( fresh.num_ands() ) + " AND gates, expected " + std::to_string( n - 2u );
    }
    add( k % 2u == 0u ? "sigma_even_step" : "sigma_odd_recursion", k, ok, detail );
  }

  /* stage 2 */
  auto const built_pairs = even ? n - 2u : n - 1u;
  for ( unsigned i = 1; i < n; ++i )
  {
    auto const symbolic = pair_product_anf( n, i );
    auto const expected = expected_pair_product( n, i );
    bool ok = symbolic == expected;
    std::string detail = mismatch_detail( symbolic, expected );
    if ( ok && i <= built_pairs )
    {
      auto const& got = node_anf( "s_" + std::to_string( i ) + "^" + std::to_string( n ) );
      ok = got == expected;
      detail = "circuit node: " + mismatch_detail( got, expected );
    }
    add( "pair_product", i, ok, detail );
  }

  if ( even )
  {
    std::vector<unsigned> head( n - 1u );
    for ( unsigned j = 1; j < n; ++j )
    {
      head[j - 1u] = j;
    }
    auto const symbolic = sigma_anf( n, n - 1u ) * anf::xor_of_variables( n, head );
    auto const expected = reference_anf( n, n );
    auto const& got = node_anf( "f_" + std::to_string( n ) );
    bool const ok = symbolic == expected && got == expected;
    add( "even_last_output", 0u, ok, symbolic == expected ? "circuit node: " + mismatch_detail( got, expected ) : mismatch_detail( symbolic, expected ) );
  }

  {
    std::vector<anf const*> vectors{ &node_anf( "s_0^" + std::to_string( n ) ) };
    for ( unsigned i = 1; i <= built_pairs; ++i )
    {
      vectors.push_back( &node_anf( "s_" + std::to_string( i ) + "^" + std::to_string( n ) ) );
    }
    if ( even )
    {
      vectors.push_back( &node_anf( "f_" + std::to_string( n ) ) );
    }
    std::vector<std::uint64_t> rows;
    bool in_basis = true;
    for ( auto const* v : vectors )
    {
      auto row = top_degree_row( *v );
      in_basis = in_basis && row.has_value();
      rows.push_back( row.value_or( 0u ) );
    }
    auto const rank = gf2_rank( rows );
    add( "linear_independence", 0u, in_basis && vectors.size() == n && rank == n,
         "rank " + std::to_string( rank ) + " of " + std::to_string( vectors.size() ) + " vectors" + ( in_basis ? "" : ", some vector leaves the degree-(n-1) basis" ) );
  }

  /* stage 3 */
  {
    auto const& got = node_anf( "f_1" );
    auto const expected = reference_anf( n, 1u );
    add( "first_output", 1u, got == expected, mismatch_detail( got, expected ) );
  }
  for ( unsigned k = 2; k <= n; ++k )
  {
    auto const& got = node_anf( "f_" + std::to_string( k ) );
    auto const chained = node_anf( "f_" + std::to_string( k - 1u ) ) ^ pair_product_anf( n, k - 1u );
    auto const expected = reference_anf( n, k );
    bool const ok = got == chained && got == expected;
    add( "output_chain", k, ok, got == chained ? mismatch_detail( got, expected ) : "f_k differs from f_{k-1} ^ s_{k-1}^n: " + mismatch_detail( got, chained ) );
  }

  {
    std::array<std::size_t, 3> const budget{ n - 2u, n - 1u, 0u };
    bool const ok = p.stage_ands == budget && p.result.and_count() == 2u * n - 3u;
    add( "stage_budget", 0u, ok,
         "stages used " + std::to_string( p.stage_ands[0] ) + "/" + std::to_string( p.stage_ands[1] ) + "/" + std::to_string( p.stage_ands[2] ) +
             " AND gates, total " + std::to_string( p.result.and_count() ) );
  }
}

} // namespace

std::string_view to_string( check_mode mode )
{
  return mode == check_mode::exhaustive ? "exhaustive" : "sampled";
}

std::vector<bool> reference_f( std::vector<bool> const& input )
{
  auto const n = input.size();
  if ( n == 0u )
  {
    throw std::invalid_argument( "reference_f needs at least one input" );
  }
  /* f_i is 1 iff every zero of the input sits at position i */
  std::size_t zeros = 0u;
  std::size_t zero_at = 0u;
  for ( std::size_t j = 0; j < n; ++j )
  {
    if ( !input[j] )
    {
      ++zeros;
      zero_at = j;
    }
  }
  std::vector<bool> out( n, zeros == 0u );
  if ( zeros == 1u )
  {
    out[zero_at] = true;
  }
  return out;
}

std::vector<bool> reference_f( unsigned n, std::vector<bool> const& input )
{
  if ( input.size() != n )
  {
    throw std::invalid_argument( "reference_f expects " + std::to_string( n ) + " input bits, got " + std::to_string( input.size() ) );
  }
  return reference_f( input );
}

std::vector<truth_table> reference_tables( unsigned n )
{
  std::vector<truth_table> tables( n, truth_table( n ) );
  auto const all_ones = ( std::uint64_t{ 1 } << n ) - 1u;
  for ( unsigned i = 0; i < n; ++i )
  {
    /* x_j = 1 for every j != i: the all-ones input and the one clearing x_i */
    tables[i].set( all_ones, true );
    tables[i].set( all_ones & ~( std::uint64_t{ 1 } << i ), true );
  }
  return tables;
}

anf reference_anf( unsigned n, unsigned i )
{
  return anf( n, { monomial::all_but( n, i ) } );
}

verification_report check_exhaustive( circuit const& c, std::optional<std::size_t> expected_and_count )
{
  require_outputs_match_arity( c );
  auto const n = c.arity();
  if ( n > max_dense_arity )
  {
    throw std::invalid_argument( "arity " + std::to_string( n ) + " too large for exhaustive checking (max " + std::to_string( max_dense_arity ) + ")" );
  }

  verification_report report;
  report.mode = check_mode::exhaustive;
  report.arity = n;
  report.inputs_checked = std::uint64_t{ 1 } << n;
  report.outputs_checked = c.num_outputs();

  auto const got = c.eval_all();
  auto const expected = reference_tables( n );
  for ( std::size_t o = 0; o < got.size(); ++o )
  {
    auto const g = got[o].words();
    auto const e = expected[o].words();
    for ( std::size_t w = 0; w < g.size(); ++w )
    {
      for ( auto diff = g[w] ^ e[w]; diff != 0u; diff &= diff - 1u )
      {
        auto const x = w * 64u + static_cast<std::uint64_t>( std::countr_zero( diff ) );
        record( report, bits_of( x, n ), o, expected[o].get( x ), got[o].get( x ) );
      }
    }
  }
  finish( report, c, expected_and_count );
  return report;
}

sample_batches make_sample_batches( unsigned n, std::size_t count, std::uint64_t seed )
{
  sample_batches batches;
  auto const structured = std::size_t{ n } + 2u;

  for ( std::size_t start = 0; start < structured; start += lanes_per_word )
  {
    auto const lanes = static_cast<unsigned>( std::min<std::size_t>( lanes_per_word, structured - start ) );
    std::vector<std::uint64_t> words( n, 0u );
    for ( unsigned lane = 0; lane < lanes; ++lane )
    {
      auto const sample = start + lane;
      auto const bit = std::uint64_t{ 1 } << lane;
      for ( unsigned j = 0; j < n; ++j )
      {
        /* sample 0: all ones, 1: all zeros, 2+k: only x_{k+1} is zero */
        bool const value = sample == 0u || ( sample >= 2u && sample - 2u != j );
        if ( value )
        {
          words[j] |= bit;
        }
      }
    }
    batches.words.push_back( std::move( words ) );
    batches.lanes.push_back( lanes );
  }

  std::mt19937_64 rng( seed );
  for ( std::size_t start = 0; start < count; start += lanes_per_word )
  {
    auto const lanes = static_cast<unsigned>( std::min<std::size_t>( lanes_per_word, count - start ) );
    auto const mask = lanes == lanes_per_word ? ~std::uint64_t{ 0 } : ( std::uint64_t{ 1 } << lanes ) - 1u;
    std::vector<std::uint64_t> words( n );
    for ( auto& w : words )
    {
      w = rng() & mask;
    }
    batches.words.push_back( std::move( words ) );
    batches.lanes.push_back( lanes );
  }
  return batches;
}

verification_report check_sampled( circuit const& c, std::size_t count, std::uint64_t seed,
                                   std::optional<std::size_t> expected_and_count )
{
  if ( count < 1u )
  {
    throw std::invalid_argument( "sample count must be at least 1" );
  }
  require_outputs_match_arity( c );
  auto const n = c.arity();

  verification_report report;
  report.mode = check_mode::sampled;
  report.samples = count;
  report.seed = seed;
  report.arity = n;
  report.outputs_checked = c.num_outputs();

  auto const batches = make_sample_batches( n, count, seed );
  std::vector<bool> input( n );
  for ( std::size_t b = 0; b < batches.words.size(); ++b )
  {
    auto const& words = batches.words[b];
    auto const got = c.simulate( words );
    for ( unsigned lane = 0; lane < batches.lanes[b]; ++lane )
    {
      for ( unsigned j = 0; j < n; ++j )
      {
        input[j] = ( words[j] >> lane ) & 1u;
      }
      auto const expected = reference_f( input );
      for ( std::size_t o = 0; o < n; ++o )
      {
        bool const value = ( got[o] >> lane ) & 1u;
        if ( value != expected[o] )
        {
          record( report, input, o, expected[o], value );
        }
      }
      ++report.inputs_checked;
    }
  }
  finish( report, c, expected_and_count );
  return report;
}

std::vector<anf> symbolic_anfs( circuit const& c )
{
  auto const n = c.arity();
  std::vector<anf> values;
  values.reserve( c.size() );
  for ( auto const& g : c.gates() )
  {
    switch ( g.kind )
    {
    case gate_kind::input:
      values.push_back( anf::variable( n, g.var ) );
      break;
    case gate_kind::const1:
      values.push_back( anf::one( n ) );
      break;
    case gate_kind::and_gate:
      values.push_back( values[g.fanins[0].index] * values[g.fanins[1].index] );
      break;
    case gate_kind::not_gate:
      values.push_back( values[g.fanins[0].index] ^ anf::one( n ) );
      break;
    case gate_kind::xor_gate:
    {
      anf sum( n );
      for ( auto f : g.fanins )
      {
        sum = sum ^ values[f.index];
      }
      values.push_back( std::move( sum ) );
      break;
    }
    }
  }
  return values;
}

std::size_t gf2_rank( std::vector<std::uint64_t> rows )
{
  std::size_t rank = 0u;
  for ( unsigned col = 0; col < 64u && rank < rows.size(); ++col )
  {
    auto const bit = std::uint64_t{ 1 } << col;
    auto pivot = rank;
    while ( pivot < rows.size() && !( rows[pivot] & bit ) )
    {
      ++pivot;
    }
    if ( pivot == rows.size() )
    {
      continue;
    }
    std::swap( rows[rank], rows[pivot] );
    for ( std::size_t r = 0; r < rows.size(); ++r )
    {
      if ( r != rank && ( rows[r] & bit ) )
      {
        rows[r] ^= rows[rank];
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<lemma_check> check_lemma_suite( unsigned n_max )
{
  if ( n_max < min_arity || n_max > 16u )
  {
    throw std::invalid_argument( "lemma suite n_max must lie in 3..16, got " + std::to_string( n_max ) );
  }
  std::vector<lemma_check> results;
  for ( unsigned n = min_arity; n <= n_max; ++n )
  {
    check_one_arity( n, results );
  }
  return results;
}

} // namespace mcxag
