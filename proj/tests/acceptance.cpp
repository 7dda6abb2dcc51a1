/* Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails. */

#include <mcxag/cli.hpp>
#include <mcxag/io.hpp>
#include <mcxag/synth.hpp>
#include <mcxag/verify.hpp>

#include "oracles.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace mcxag;
using namespace mcxag::testing;

namespace
{

struct outcome
{
  bool ok{ true };
  std::string detail;

  void fail( std::string const& why )
  {
    if ( ok )
    {
      detail = why;
    }
    ok = false;
  }
};

std::string label( std::string const& prefix, unsigned n, unsigned i = 0u )
{
  return prefix + std::to_string( i ) + "^" + std::to_string( n );
}

std::string output_label( unsigned k )
{
  return "f_" + std::to_string( k );
}

/* truth tables of f_1..f_n from the literal products */
std::vector<truth_table> oracle_tables( unsigned n )
{
  std::vector<truth_table> tables( n, truth_table( n ) );
  for ( std::uint64_t x = 0; x < ( std::uint64_t{ 1 } << n ); ++x )
  {
    for ( unsigned i = 1; i <= n; ++i )
    {
      if ( leave_one_out( n, i, x ) )
      {
        tables[i - 1u].set( x, true );
      }
    }
  }
  return tables;
}

std::size_t count_and_lines( std::string const& text )
{
  std::istringstream in( text );
  std::size_t count = 0u;
  for ( std::string line; std::getline( in, line ); )
  {
    if ( line.ends_with( " AND" ) )
    {
      ++count;
    }
  }
  return count;
}

outcome exact_optimal_count()
{
  outcome o;
  for ( unsigned n = 3; n <= 1000; ++n )
  {
    auto const count = synthesize( n, construction::optimal ).and_count();
    if ( count != 2u * n - 3u )
    {
      o.fail( "n=" + std::to_string( n ) + " and_count=" + std::to_string( count ) );
    }
  }
  return o;
}

outcome exhaustive_correctness()
{
  outcome o;
  for ( unsigned n = 3; n <= 16; ++n )
  {
    auto const expected = oracle_tables( n );
    for ( auto kind : { construction::optimal, construction::baseline } )
    {
      auto const c = synthesize( n, kind );
      auto const report = check_exhaustive( c );
      if ( !report.passed || report.inputs_checked != ( std::uint64_t{ 1 } << n ) || report.outputs_checked != n )
      {
        o.fail( "check_exhaustive failed n=" + std::to_string( n ) + " " + std::string( to_string( kind ) ) );
      }
      if ( c.eval_all() != expected )
      {
        o.fail( "truth tables differ from the literal products n=" + std::to_string( n ) + " " + std::string( to_string( kind ) ) );
      }
    }
  }
  return o;
}

outcome stage1_count()
{
  outcome o;
  for ( unsigned n = 3; n <= 1000; ++n )
  {
    circuit_builder b( n );
    b.inputs();
    auto const before = b.num_ands();
    auto const stage1 = build_sigma( n, b );
    if ( b.num_ands() - before != n - 2u )
    {
      o.fail( "n=" + std::to_string( n ) + " added " + std::to_string( b.num_ands() - before ) + " ANDs" );
    }
    b.add_output( stage1.sigma, label( "s_", n ) );
    auto const c = b.build();
    if ( c.and_count() != n - 2u )
    {
      o.fail( "n=" + std::to_string( n ) + " reachable and_count " + std::to_string( c.and_count() ) );
    }
    if ( n <= 14 )
    {
      auto const table = c.eval_all().front();
      for ( std::uint64_t x = 0; x < table.num_bits(); ++x )
      {
        if ( table.get( x ) != sigma_value( n, x ) )
        {
          o.fail( "n=" + std::to_string( n ) + " differs at input " + std::to_string( x ) );
          break;
        }
      }
    }
  }
  return o;
}

outcome pair_products()
{
  outcome o;
  for ( unsigned n = 3; n <= 12; ++n )
  {
    auto const p = plan( n, construction::optimal );
    auto const anfs = symbolic_anfs( p.result );
    auto const& sigma = anfs[p.node( label( "s_", n ) ).index];
    for ( unsigned i = 1; i < n; ++i )
    {
      anf const expected( n, { monomial::all_but( n, i ), monomial::all_but( n, i + 1u ) } );
      auto const product = anf::xor_of_variables( n, { i, i + 1u } ) * sigma;
      if ( product != expected || product.size() != 2u )
      {
        o.fail( "n=" + std::to_string( n ) + " i=" + std::to_string( i ) + " product " + product.to_string() );
      }
      /* the stage-2 gate, where the construction builds it */
      if ( n % 2u == 1u || i <= n - 2u )
      {
        auto const& gate_anf = anfs[p.node( label( "s_", n, i ) ).index];
        if ( gate_anf != expected )
        {
          o.fail( "n=" + std::to_string( n ) + " i=" + std::to_string( i ) + " gate " + gate_anf.to_string() );
        }
      }
    }
  }
  return o;
}

outcome even_stage2()
{
  outcome o;
  for ( unsigned n = 4; n <= 12; n += 2 )
  {
    auto const p = plan( n, construction::optimal );
    auto const anfs = symbolic_anfs( p.result );
    auto const& before = anfs[p.node( label( "s_", n - 1u ) ).index];
    std::vector<unsigned> head;
    for ( unsigned j = 1; j < n; ++j )
    {
      head.push_back( j );
    }
    anf const expected( n, { monomial::all_but( n, n ) } );
    auto const product = before * anf::xor_of_variables( n, head );
    if ( product != expected )
    {
      o.fail( "n=" + std::to_string( n ) + " product " + product.to_string() );
    }
    if ( anfs[p.node( output_label( n ) ).index] != expected )
    {
      o.fail( "n=" + std::to_string( n ) + " f_n gate differs" );
    }
  }
  return o;
}

outcome linear_independence()
{
  outcome o;
  for ( unsigned n = 3; n <= 12; ++n )
  {
    auto const p = plan( n, construction::optimal );
    auto const anfs = symbolic_anfs( p.result );
    std::vector<gate_id> nodes{ p.node( label( "s_", n ) ) };
    unsigned const pairs = n % 2u == 0u ? n - 2u : n - 1u;
    for ( unsigned i = 1; i <= pairs; ++i )
    {
      nodes.push_back( p.node( label( "s_", n, i ) ) );
    }
    if ( n % 2u == 0u )
    {
      nodes.push_back( p.node( output_label( n ) ) );
    }
    std::vector<std::uint64_t> rows;
    for ( auto id : nodes )
    {
      std::uint64_t row = 0u;
      for ( auto const& m : anfs[id.index].terms() )
      {
        if ( m.degree() != n - 1u )
        {
          o.fail( "n=" + std::to_string( n ) + " term of degree " + std::to_string( m.degree() ) );
        }
        for ( unsigned k = 1; k <= n; ++k )
        {
          if ( !m.contains( k ) )
          {
            row |= std::uint64_t{ 1 } << ( k - 1u );
          }
        }
      }
      rows.push_back( row );
    }
    if ( rows.size() != n || gf2_rank( rows ) != n )
    {
      o.fail( "n=" + std::to_string( n ) + " rank " + std::to_string( gf2_rank( rows ) ) + " of " + std::to_string( rows.size() ) );
    }
  }
  return o;
}

outcome baseline_count()
{
  outcome o;
  for ( unsigned n = 3; n <= 1000; ++n )
  {
    auto const count = synthesize( n, construction::baseline ).and_count();
    if ( count != 3u * n - 6u )
    {
      o.fail( "n=" + std::to_string( n ) + " and_count=" + std::to_string( count ) );
    }
  }
  return o;
}

outcome degree_bound_reporting()
{
  outcome o;
  for ( unsigned n : { 3u, 4u, 7u, 12u, 16u, 17u, 100u, 1000u } )
  {
    std::ostringstream out, err;
    if ( run_cli( { "stats", "--n", std::to_string( n ) }, out, err ) != exit_ok )
    {
      o.fail( "stats failed for n=" + std::to_string( n ) );
      continue;
    }
    auto const text = out.str();
    auto const optimal = "optimal: and_count=" + std::to_string( 2u * n - 3u ) + " ";
    if ( text.find( optimal ) == std::string::npos )
    {
      o.fail( "n=" + std::to_string( n ) + " missing '" + optimal + "'" );
    }
    for ( unsigned k = 1; k <= n; ++k )
    {
      auto const line = "degree bound f_" + std::to_string( k ) + ": " + std::to_string( n - 2u ) + "\n";
      if ( text.find( line ) == std::string::npos )
      {
        o.fail( "n=" + std::to_string( n ) + " missing bound for f_" + std::to_string( k ) );
        break;
      }
    }
    if ( n - 2u > 2u * n - 3u || text.find( "degree bounds <= optimal and_count: yes" ) == std::string::npos )
    {
      o.fail( "n=" + std::to_string( n ) + " bound exceeds the count" );
    }
  }
  return o;
}

outcome large_differential( double& synth_seconds )
{
  outcome o;
  for ( unsigned n : { 101u, 1024u, 4097u } )
  {
    auto const optimal = synthesize( n, construction::optimal );
    auto const baseline = synthesize( n, construction::baseline );
    auto const batches = make_sample_batches( n, 10000u, 42u );
    std::uint64_t checked = 0u;
    for ( std::size_t b = 0; b < batches.words.size(); ++b )
    {
      auto const& words = batches.words[b];
      auto const a = optimal.simulate( words );
      auto const c = baseline.simulate( words );
      for ( unsigned lane = 0; lane < batches.lanes[b]; ++lane )
      {
        /* f_i(x) = 1 iff x has no zero outside position i */
        unsigned zeros = 0u, zero_at = 0u;
        for ( unsigned j = 0; j < n; ++j )
        {
          if ( !( ( words[j] >> lane ) & 1u ) )
          {
            ++zeros;
            zero_at = j;
          }
        }
        for ( unsigned j = 0; j < n; ++j )
        {
          bool const expected = zeros == 0u || ( zeros == 1u && zero_at == j );
          bool const got_a = ( a[j] >> lane ) & 1u;
          bool const got_c = ( c[j] >> lane ) & 1u;
          if ( got_a != expected || got_c != expected )
          {
            o.fail( "n=" + std::to_string( n ) + " mismatch on output " + std::to_string( j + 1u ) );
          }
        }
        ++checked;
      }
    }
    if ( checked != 10000u + n + 2u )
    {
      o.fail( "n=" + std::to_string( n ) + " checked " + std::to_string( checked ) + " inputs" );
    }
    for ( auto const* c : { &optimal, &baseline } )
    {
      if ( !check_sampled( *c, 10000u, 42u ).passed )
      {
        o.fail( "check_sampled failed for n=" + std::to_string( n ) );
      }
    }
  }

  auto const start = std::chrono::steady_clock::now();
  auto const big = synthesize( 100000u, construction::optimal );
  synth_seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  if ( big.and_count() != 199997u )
  {
    o.fail( "n=100000 and_count=" + std::to_string( big.and_count() ) );
  }
  if ( synth_seconds >= 5.0 )
  {
    o.fail( "n=100000 synthesis took " + std::to_string( synth_seconds ) + " s" );
  }
  if ( synthesize( 100000u, construction::baseline ).and_count() != 299994u )
  {
    o.fail( "n=100000 baseline count" );
  }
  return o;
}

outcome export_integrity()
{
  outcome o;
  for ( unsigned n = 3; n <= 12; ++n )
  {
    for ( auto kind : { construction::optimal, construction::baseline } )
    {
      auto const c = synthesize( n, kind );
      auto const text = export_bristol( c );
      auto const back = import_bristol( text );
      auto const tag = "n=" + std::to_string( n ) + " " + std::string( to_string( kind ) );
      if ( back.eval_all() != c.eval_all() || !check_exhaustive( back ).passed )
      {
        o.fail( tag + " not equivalent after round trip" );
      }
      if ( count_and_lines( text ) != expected_and_count( n, kind ) || back.and_count() != expected_and_count( n, kind ) )
      {
        o.fail( tag + " AND lines " + std::to_string( count_and_lines( text ) ) );
      }
    }
  }
  return o;
}

outcome mutation_sensitivity( std::size_t& mutants )
{
  outcome o;
  for ( unsigned n = 3; n <= 8; ++n )
  {
    auto const c = synthesize( n, construction::optimal );
    auto const reachable = c.reachable();
    for ( std::size_t k = 0; k < c.num_outputs(); ++k )
    {
      for ( std::uint32_t g = 0; g < c.size(); ++g )
      {
        if ( !reachable[g] || g == c.outputs()[k].node.index )
        {
          continue;
        }
        ++mutants;
        if ( check_exhaustive( c.with_output( k, gate_id{ g } ) ).passed )
        {
          o.fail( "undetected: n=" + std::to_string( n ) + " output " + std::to_string( k + 1u ) + " -> gate " + std::to_string( g ) );
        }
      }
    }
  }
  return o;
}

bool report( int index, std::string const& name, double limit_seconds, std::function<outcome( std::string& )> const& body )
{
  std::string extra;
  auto const start = std::chrono::steady_clock::now();
  auto o = body( extra );
  auto const seconds = std::chrono::duration<double>( std::chrono::steady_clock::now() - start ).count();
  if ( seconds >= limit_seconds )
  {
    o.fail( "runtime limit exceeded" );
  }
  char timing[64];
  std::snprintf( timing, sizeof timing, "%.3f s / limit %.0f s", seconds, limit_seconds );
  std::cout << ( o.ok ? "PASS" : "FAIL" ) << " criterion " << index << ": " << name << " (" << timing << extra << ")";
  if ( !o.ok )
  {
    std::cout << ": " << o.detail;
  }
  std::cout << std::endl;
  return o.ok;
}

} // namespace

int main()
{
  bool all = true;
  all &= report( 1, "optimal AND count 2n-3 for n=3..1000", 5.0, []( std::string& ) { return exact_optimal_count(); } );
  all &= report( 2, "exhaustive equivalence for n=3..16, both constructions", 60.0, []( std::string& ) { return exhaustive_correctness(); } );
  all &= report( 3, "stage 1 adds n-2 ANDs (n=3..1000), table matches for n=3..14", 10.0, []( std::string& ) { return stage1_count(); } );
  all &= report( 4, "pair products keep exactly two monomials for n=3..12", 10.0, []( std::string& ) { return pair_products(); } );
  all &= report( 5, "even-n last output leaves a single monomial for n=4..12", 5.0, []( std::string& ) { return even_stage2(); } );
  all &= report( 6, "stage 2 outputs have GF(2) rank n for n=3..12", 5.0, []( std::string& ) { return linear_independence(); } );
  all &= report( 7, "baseline AND count 3n-6 for n=3..1000", 5.0, []( std::string& ) { return baseline_count(); } );
  all &= report( 8, "stats reports bound n-2 <= optimal count 2n-3", 5.0, []( std::string& ) { return degree_bound_reporting(); } );
  all &= report( 9, "sampled differential for n in {101, 1024, 4097}, n=100000 synthesis", 60.0, []( std::string& extra ) {
    double synth = 0.0;
    auto o = large_differential( synth );
    char buf[64];
    std::snprintf( buf, sizeof buf, "; n=100000 synthesis %.3f s / limit 5 s", synth );
    extra = buf;
    return o;
  } );
  all &= report( 10, "Bristol round trip for n=3..12, both constructions", 30.0, []( std::string& ) { return export_integrity(); } );
  all &= report( 11, "every single-output retargeting detected for n=3..8", 30.0, []( std::string& extra ) {
    std::size_t mutants = 0u;
    auto o = mutation_sensitivity( mutants );
    extra = "; " + std::to_string( mutants ) + " mutants";
    return o;
  } );
  std::cout << ( all ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED" ) << std::endl;
  return all ? 0 : 1;
}
