#include <mcxag/synth.hpp>

#include <stdexcept>

namespace mcxag
{

namespace
{

void check_arity( unsigned n )
{
  if ( n < min_arity )
  {
    throw std::invalid_argument( "n = " + std::to_string( n ) + " is out of range; the constructions require n >= 3" );
  }
}

std::string sigma_label( unsigned k )
{
  return "s_0^" + std::to_string( k );
}

std::string pair_label( unsigned i, unsigned n )
{
  return "s_" + std::to_string( i ) + "^" + std::to_string( n );
}

std::string output_label( unsigned k )
{
  return "f_" + std::to_string( k );
}

synthesis_plan plan_optimal( unsigned n )
{
  circuit_builder builder( n );
  builder.inputs();
  xor_prefixes prefixes( builder );

  synthesis_plan p;
  p.n = n;
  p.kind = construction::optimal;

  auto const before_stage1 = builder.num_ands();
  auto const stage1 = build_sigma( n, builder, prefixes );
  auto const before_stage2 = builder.num_ands();
  auto const stage2 = build_stage2( n, builder, prefixes, stage1 );
  auto const before_stage3 = builder.num_ands();
  auto const outputs = build_stage3( n, builder, stage1, stage2 );
  p.stage_ands = { before_stage2 - before_stage1, before_stage3 - before_stage2, builder.num_ands() - before_stage3 };

  p.intermediates = stage1.chain;
  for ( unsigned i = 1; i <= stage2.pair_products.size(); ++i )
  {
    p.intermediates.push_back( { pair_label( i, n ), stage2.pair_products[i - 1u] } );
  }
  for ( unsigned k = 1; k <= n; ++k )
  {
    p.intermediates.push_back( { output_label( k ), outputs[k - 1u] } );
    builder.add_output( outputs[k - 1u], output_label( k ) );
  }
  p.result = builder.build();
  return p;
}

synthesis_plan plan_baseline( unsigned n )
{
  circuit_builder builder( n );
  auto const x = builder.inputs(); /* x[j-1] is x_j */

  synthesis_plan p;
  p.n = n;
  p.kind = construction::baseline;

  /* prefix[i] = x_1 ... x_i */
  std::vector<gate_id> prefix( n + 1u );
  prefix[1] = x[0];
  for ( unsigned i = 2; i + 1u <= n; ++i )
  {
    prefix[i] = builder.make_and( prefix[i - 1u], x[i - 1u] );
    p.intermediates.push_back( { "p_" + std::to_string( i ), prefix[i] } );
  }
  auto const after_prefix = builder.num_ands();

  /* suffix[i] = x_i ... x_n */
  std::vector<gate_id> suffix( n + 1u );
  suffix[n] = x[n - 1u];
  for ( unsigned i = n - 1u; i >= 2u; --i )
  {
    suffix[i] = builder.make_and( x[i - 1u], suffix[i + 1u] );
    p.intermediates.push_back( { "q_" + std::to_string( i ), suffix[i] } );
  }
  auto const after_suffix = builder.num_ands();

  std::vector<gate_id> outputs( n );
  outputs[0] = suffix[2];
  outputs[n - 1u] = prefix[n - 1u];
  for ( unsigned i = 2; i < n; ++i )
  {
    outputs[i - 1u] = builder.make_and( prefix[i - 1u], suffix[i + 1u] );
  }
  p.stage_ands = { after_prefix, after_suffix - after_prefix, builder.num_ands() - after_suffix };

  for ( unsigned k = 1; k <= n; ++k )
  {
    p.intermediates.push_back( { output_label( k ), outputs[k - 1u] } );
    builder.add_output( outputs[k - 1u], output_label( k ) );
  }
  p.result = builder.build();
  return p;
}

} // namespace

std::string_view to_string( construction c )
{
  return c == construction::optimal ? "optimal" : "baseline";
}

construction parse_construction( std::string_view name )
{
  if ( name == "optimal" )
  {
    return construction::optimal;
  }
  if ( name == "baseline" )
  {
    return construction::baseline;
  }
  throw std::invalid_argument( "unknown construction '" + std::string( name ) + "' (expected optimal or baseline)" );
}

xor_prefixes::xor_prefixes( circuit_builder& builder )
    : builder_( &builder )
{
}

gate_id xor_prefixes::upto( unsigned k )
{
  if ( k < 1u || k > builder_->arity() )
  {
    throw std::invalid_argument( "XOR prefix length " + std::to_string( k ) + " out of range" );
  }
  if ( prefix_.empty() )
  {
    prefix_.push_back( builder_->input_node( 1u ) );
  }
  while ( prefix_.size() < k )
  {
    auto const next = static_cast<unsigned>( prefix_.size() ) + 1u;
    prefix_.push_back( builder_->make_xor( prefix_.back(), builder_->input_node( next ) ) );
  }
  return prefix_[k - 1u];
}

stage1_nodes build_sigma( unsigned n, circuit_builder& builder, xor_prefixes& prefixes )
{
  check_arity( n );
  if ( builder.arity() < n )
  {
    throw std::invalid_argument( "builder arity " + std::to_string( builder.arity() ) + " is smaller than n = " + std::to_string( n ) );
  }
  auto x = [&]( unsigned j ) { return builder.input_node( j ); };

  stage1_nodes result;
  auto sigma = builder.make_xor( builder.make_and( builder.make_xor( x( 1 ), x( 2 ) ), builder.make_xor( x( 2 ), x( 3 ) ) ), x( 2 ) );
  result.chain.push_back( { sigma_label( 3 ), sigma } );

  auto const odd_top = n % 2u == 1u ? n : n - 1u;
  for ( unsigned k = 5; k <= odd_top; k += 2u )
  {
    auto const pair = builder.make_xor( x( k - 1u ), x( k ) );
    auto const factor = builder.make_xor( builder.make_and( pair, prefixes.upto( k - 1u ) ), x( k - 1u ) );
    sigma = builder.make_and( sigma, factor );
    result.chain.push_back( { sigma_label( k ), sigma } );
  }

  if ( n % 2u == 0u )
  {
    result.sigma_before = sigma;
    sigma = builder.make_and( sigma, prefixes.upto( n ) );
    result.chain.push_back( { sigma_label( n ), sigma } );
  }
  result.sigma = sigma;
  return result;
}

stage1_nodes build_sigma( unsigned n, circuit_builder& builder )
{
  xor_prefixes prefixes( builder );
  return build_sigma( n, builder, prefixes );
}

stage2_nodes build_stage2( unsigned n, circuit_builder& builder, xor_prefixes& prefixes, stage1_nodes const& stage1 )
{
  check_arity( n );
  bool const even = n % 2u == 0u;
  if ( even && !stage1.sigma_before )
  {
    throw std::invalid_argument( "stage 2 for even n requires s_0^" + std::to_string( n - 1u ) + " from stage 1" );
  }

  stage2_nodes result;
  auto const count = even ? n - 2u : n - 1u;
  result.pair_products.reserve( count );
  for ( unsigned i = 1; i <= count; ++i )
  {
    auto const pair = builder.make_xor( builder.input_node( i ), builder.input_node( i + 1u ) );
    result.pair_products.push_back( builder.make_and( pair, stage1.sigma ) );
  }
  if ( even )
  {
    result.last_output = builder.make_and( *stage1.sigma_before, prefixes.upto( n - 1u ) );
  }
  return result;
}

std::vector<gate_id> build_stage3( unsigned n, circuit_builder& builder, stage1_nodes const& stage1, stage2_nodes const& stage2 )
{
  check_arity( n );
  bool const even = n % 2u == 0u;
  auto const count = even ? n - 2u : n - 1u;
  if ( stage2.pair_products.size() != count || even != stage2.last_output.has_value() )
  {
    throw std::invalid_argument( "stage 3 for n = " + std::to_string( n ) + " is missing stage-2 nodes" );
  }
  auto s = [&]( unsigned i ) { return stage2.pair_products[i - 1u]; };

  /* f_1 = s_0^n (^ f_n) ^ s_2^n ^ s_4^n ^ ... */
  std::vector<gate_id> operands{ stage1.sigma };
  if ( even )
  {
    operands.push_back( *stage2.last_output );
  }
  for ( unsigned i = 2; i <= count; i += 2u )
  {
    operands.push_back( s( i ) );
  }

  std::vector<gate_id> outputs( n );
  outputs[0] = builder.make_xor( operands );
  auto const chained = even ? n - 1u : n;
  for ( unsigned k = 2; k <= chained; ++k )
  {
    outputs[k - 1u] = builder.make_xor( outputs[k - 2u], s( k - 1u ) );
  }
  if ( even )
  {
    outputs[n - 1u] = *stage2.last_output;
  }
  return outputs;
}

gate_id synthesis_plan::node( std::string_view label ) const
{
  for ( auto const& l : intermediates )
  {
    if ( l.label == label )
    {
      return l.node;
    }
  }
  throw std::invalid_argument( "no intermediate labeled '" + std::string( label ) + "'" );
}

synthesis_plan plan( unsigned n, construction kind )
{
  check_arity( n );
  return kind == construction::optimal ? plan_optimal( n ) : plan_baseline( n );
}

circuit synthesize( unsigned n, construction kind )
{
  return plan( n, kind ).result;
}

std::size_t expected_and_count( unsigned n, construction kind )
{
  check_arity( n );
  return kind == construction::optimal ? 2u * n - 3u : 3u * n - 6u;
}

unsigned degree_lower_bound( anf const& f )
{
  auto const d = degree( f );
  return d == 0u ? 0u : d - 1u;
}

} // namespace mcxag
