#include <mcxag/synth.hpp>
#include <mcxag/xag.hpp>

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mcxag;
using namespace mcxag::testing;

TEST( Builder, Inputs )
{
  circuit_builder b( 3 );
  EXPECT_EQ( b.input( 1 ), gate_id{ 0 } );
  EXPECT_THROW( b.input( 1 ), std::invalid_argument );
  EXPECT_THROW( b.input( 5 ), std::invalid_argument );
  EXPECT_THROW( b.input( 0 ), std::invalid_argument );
  EXPECT_THROW( b.input_node( 2 ), std::invalid_argument );
}

TEST( Builder, HashConsing )
{
  circuit_builder b( 2 );
  auto const x = b.inputs();
  auto const first = b.make_xor( x[0], x[1] );
  EXPECT_EQ( b.make_xor( x[0], x[1] ), first );
  /* operand lists compare as ordered */
  EXPECT_NE( b.make_xor( x[1], x[0] ), first );
  EXPECT_EQ( b.constant_one(), b.constant_one() );
}

TEST( Builder, AndOfSameOperandIsAFreshGate )
{
  circuit_builder b( 2 );
  auto const x = b.inputs();
  auto const size_before = b.size();
  auto const a = b.make_and( x[0], x[0] );
  EXPECT_EQ( b.size(), size_before + 1u );
  EXPECT_EQ( b.num_ands(), 1u );
  b.add_output( a, "a" );
  auto const c = b.build();
  EXPECT_EQ( c.at( a ).kind, gate_kind::and_gate );
  EXPECT_EQ( c.eval( { true, false } ), std::vector<bool>{ true } );
  EXPECT_EQ( c.eval( { false, true } ), std::vector<bool>{ false } );
}

TEST( Builder, OperandErrors )
{
  circuit_builder b( 2 );
  auto const x = b.inputs();
  EXPECT_THROW( b.make_and( x[0], gate_id{ 9 } ), std::invalid_argument );
  EXPECT_THROW( b.make_not( gate_id{ 2 } ), std::invalid_argument );
  std::vector<gate_id> one{ x[0] };
  EXPECT_THROW( b.make_xor( one ), std::invalid_argument );
  EXPECT_THROW( b.add_output( gate_id{ 7 }, "bad" ), std::invalid_argument );
}

TEST( Builder, NotIsXorWithOne )
{
  circuit_builder b( 1 );
  auto const x1 = b.input( 1 );
  b.add_output( b.make_not( x1 ), "not" );
  b.add_output( b.make_xor( b.constant_one(), x1 ), "xor" );
  auto const tables = b.build().eval_all();
  EXPECT_EQ( tables[0], tables[1] );
  EXPECT_EQ( tables[0].to_string(), "10" );
}

TEST( Circuit, ConstructionValidatesTopology )
{
  std::vector<gate> gates{ { gate_kind::input, 1, {} }, { gate_kind::and_gate, 0, { gate_id{ 0 }, gate_id{ 2 } } }, { gate_kind::input, 2, {} } };
  EXPECT_THROW( circuit( 2, gates, {} ), std::invalid_argument );

  std::vector<gate> dup{ { gate_kind::input, 1, {} }, { gate_kind::input, 1, {} } };
  EXPECT_THROW( circuit( 2, dup, {} ), std::invalid_argument );

  std::vector<gate> unary_xor{ { gate_kind::input, 1, {} }, { gate_kind::xor_gate, 0, { gate_id{ 0 } } } };
  EXPECT_THROW( circuit( 1, unary_xor, {} ), std::invalid_argument );

  std::vector<gate> ternary_and{ { gate_kind::input, 1, {} }, { gate_kind::and_gate, 0, { gate_id{ 0 }, gate_id{ 0 }, gate_id{ 0 } } } };
  EXPECT_THROW( circuit( 1, ternary_and, {} ), std::invalid_argument );

  std::vector<gate> ok{ { gate_kind::input, 1, {} } };
  EXPECT_THROW( circuit( 1, ok, { { gate_id{ 3 }, "y" } } ), std::invalid_argument );
  EXPECT_THROW( circuit( 0, ok, {} ), std::invalid_argument );
}

TEST( Circuit, EvalExamples )
{
  auto const c3 = synthesize( 3, construction::optimal );
  EXPECT_EQ( c3.eval( { true, true, true } ), ( std::vector<bool>{ true, true, true } ) );

  for ( auto kind : { construction::optimal, construction::baseline } )
  {
    auto const c5 = synthesize( 5, kind );
    EXPECT_EQ( c5.eval( { true, false, true, false, true } ), std::vector<bool>( 5, false ) );
    EXPECT_EQ( c5.eval( { false, false, true, true, true } ), std::vector<bool>( 5, false ) );

    auto const c4 = synthesize( 4, kind );
    /* x_1 = 1, x_2 = 0, x_3 = 1, x_4 = 1 */
    EXPECT_EQ( c4.eval( { true, false, true, true } ), ( std::vector<bool>{ false, true, false, false } ) );
  }
  EXPECT_THROW( c3.eval( { true, true } ), std::invalid_argument );
}

TEST( Circuit, AndCountExamples )
{
  circuit_builder b( 3 );
  b.inputs();
  auto const stage1 = build_sigma( 3, b );
  b.add_output( stage1.sigma, "s0" );
  EXPECT_EQ( b.build().and_count(), 1u );

  EXPECT_EQ( synthesize( 7, construction::optimal ).and_count(), 11u );
  EXPECT_EQ( synthesize( 7, construction::baseline ).and_count(), 15u );
}

TEST( Circuit, AndCountIgnoresUnreachableGates )
{
  circuit_builder b( 2 );
  auto const x = b.inputs();
  b.make_and( x[0], x[1] );
  auto const used = b.make_and( x[1], x[0] );
  b.add_output( used, "y" );
  EXPECT_EQ( b.num_ands(), 2u );
  EXPECT_EQ( b.build().and_count(), 1u );
}

TEST( Circuit, EvalAllExamples )
{
  circuit_builder b( 2 );
  auto const x1 = b.input( 1 );
  b.input( 2 );
  b.add_output( b.constant_one(), "one" );
  b.add_output( x1, "x1" );
  auto const tables = b.build().eval_all();
  EXPECT_EQ( tables[0].to_string(), "1111" );
  EXPECT_EQ( tables[1].to_string(), "0101" );

  circuit_builder s( 3 );
  s.inputs();
  s.add_output( build_sigma( 3, s ).sigma, "s0" );
  std::vector<monomial> terms{ monomial::of( 3, { 1, 2 } ), monomial::of( 3, { 2, 3 } ), monomial::of( 3, { 1, 3 } ) };
  EXPECT_EQ( s.build().eval_all().front(), to_truth_table( anf( 3, terms ) ) );
}

TEST( Circuit, EvalAllRejectsLargeArity )
{
  circuit_builder b( 25 );
  b.add_output( b.input( 1 ), "x1" );
  EXPECT_THROW( b.build().eval_all(), std::invalid_argument );
}

TEST( Circuit, EvalAllSpansSeveralBlocks )
{
  /* 2^15 inputs = 512 words, more than one evaluation block */
  auto const c = synthesize( 15, construction::baseline );
  auto const tables = c.eval_all();
  for ( unsigned i = 1; i <= 15; ++i )
  {
    auto const& t = tables[i - 1u];
    EXPECT_EQ( t.count_ones(), 2u );
    EXPECT_TRUE( t.get( 0x7fffu ) );
    EXPECT_TRUE( t.get( 0x7fffu & ~( 1u << ( i - 1u ) ) ) );
  }
}

TEST( CircuitProperties, EvalMatchesEvalAll )
{
  std::mt19937_64 rng( 3 );
  for ( int trial = 0; trial < 60; ++trial )
  {
    auto const n = 1u + static_cast<unsigned>( rng() % 10u );
    auto const c = random_circuit( n, 5u + rng() % 40u, 1u + rng() % 4u, rng );
    auto const tables = c.eval_all();
    for ( int probe = 0; probe < 32; ++probe )
    {
      auto const x = rng() & ( ( std::uint64_t{ 1 } << n ) - 1u );
      auto const out = c.eval( bits_of( x, n ) );
      for ( std::size_t k = 0; k < out.size(); ++k )
      {
        ASSERT_EQ( out[k], tables[k].get( x ) );
      }
    }
  }
}

TEST( CircuitProperties, NotEliminationPreservesFunctionAndCount )
{
  std::mt19937_64 rng( 4 );
  for ( int trial = 0; trial < 60; ++trial )
  {
    auto const n = 1u + static_cast<unsigned>( rng() % 8u );
    auto const c = random_circuit( n, 5u + rng() % 40u, 1u + rng() % 4u, rng );
    auto const lowered = replace_not_by_xor( c );
    for ( auto const& g : lowered.gates() )
    {
      ASSERT_NE( g.kind, gate_kind::not_gate );
    }
    EXPECT_EQ( lowered.eval_all(), c.eval_all() );
    EXPECT_EQ( lowered.and_count(), c.and_count() );
  }
}

TEST( CircuitProperties, HashConsingKeepsSemantics )
{
  /* the same random gate script with and without duplicate requests */
  std::mt19937_64 rng( 5 );
  for ( int trial = 0; trial < 40; ++trial )
  {
    auto const n = 2u + static_cast<unsigned>( rng() % 6u );
    auto const seed = rng();
    auto build = [&]( bool repeat ) {
      std::mt19937_64 script( seed );
      circuit_builder b( n );
      auto nodes = b.inputs();
      for ( int k = 0; k < 30; ++k )
      {
        auto const a = nodes[script() % nodes.size()];
        auto const c = nodes[script() % nodes.size()];
        bool const use_and = script() % 2u == 0u;
        auto const id = use_and ? b.make_and( a, c ) : b.make_xor( a, c );
        if ( repeat )
        {
          EXPECT_EQ( use_and ? b.make_and( a, c ) : b.make_xor( a, c ), id );
        }
        nodes.push_back( id );
      }
      b.add_output( nodes.back(), "y" );
      b.add_output( nodes[nodes.size() / 2u], "z" );
      return b.build();
    };
    EXPECT_EQ( build( true ).eval_all(), build( false ).eval_all() );
  }
}

TEST( Circuit, WithOutputRetargets )
{
  auto const c = synthesize( 3, construction::optimal );
  auto const mutated = c.with_output( 0, c.outputs()[1].node );
  EXPECT_EQ( mutated.eval_all()[0], c.eval_all()[1] );
  EXPECT_THROW( c.with_output( 5, c.outputs()[1].node ), std::out_of_range );
}
