#include <mcxag/xag.hpp>

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace mcxag
{

namespace
{

constexpr std::uint64_t lane_patterns[6] = {
    0xaaaaaaaaaaaaaaaaull, 0xccccccccccccccccull, 0xf0f0f0f0f0f0f0f0ull,
    0xff00ff00ff00ff00ull, 0xffff0000ffff0000ull, 0xffffffff00000000ull };

/* words per gate processed at once by eval_all */
constexpr std::size_t eval_all_block = 256u;

std::string describe( gate_id id )
{
  return "gate " + std::to_string( id.index );
}

} // namespace

std::string_view to_string( gate_kind kind )
{
  switch ( kind )
  {
  case gate_kind::input:
    return "INPUT";
  case gate_kind::const1:
    return "CONST1";
  case gate_kind::and_gate:
    return "AND";
  case gate_kind::xor_gate:
    return "XOR";
  case gate_kind::not_gate:
    return "NOT";
  }
  return "?";
}

/* circuit */

circuit::circuit( unsigned arity, std::vector<gate> gates, std::vector<circuit_output> outputs )
    : arity_( arity ), gates_( std::move( gates ) ), outputs_( std::move( outputs ) )
{
  if ( gates_.size() > std::numeric_limits<std::uint32_t>::max() )
  {
    throw std::invalid_argument( "too many gates" );
  }
  std::vector<bool> seen_var( arity_ + 1u, false );
  for ( std::uint32_t i = 0; i < gates_.size(); ++i )
  {
    auto const& g = gates_[i];
    auto const where = [i] { return describe( gate_id{ i } ); };
    std::size_t expected_fanins = 0u;
    switch ( g.kind )
    {
    case gate_kind::input:
      if ( g.var < 1u || g.var > arity_ )
      {
        throw std::invalid_argument( where() + ": input variable x" + std::to_string( g.var ) + " out of range 1.." + std::to_string( arity_ ) );
      }
      if ( seen_var[g.var] )
      {
        throw std::invalid_argument( where() + ": duplicate input x" + std::to_string( g.var ) );
      }
      seen_var[g.var] = true;
      break;
    case gate_kind::const1:
      break;
    case gate_kind::and_gate:
      expected_fanins = 2u;
      break;
    case gate_kind::not_gate:
      expected_fanins = 1u;
      break;
    case gate_kind::xor_gate:
      if ( g.fanins.size() < 2u )
      {
        throw std::invalid_argument( where() + ": XOR needs at least two operands" );
      }
      expected_fanins = g.fanins.size();
      break;
    }
    if ( g.fanins.size() != expected_fanins )
    {
      throw std::invalid_argument( where() + ": " + std::string( to_string( g.kind ) ) + " has " + std::to_string( g.fanins.size() ) + " operands" );
    }
    for ( auto f : g.fanins )
    {
      if ( f.index >= i )
      {
        throw std::invalid_argument( where() + ": operand " + std::to_string( f.index ) + " is not an earlier gate" );
      }
    }
  }
  for ( auto const& o : outputs_ )
  {
    if ( o.node.index >= gates_.size() )
    {
      throw std::invalid_argument( "output '" + o.label + "' references unknown " + describe( o.node ) );
    }
  }
}

void circuit::simulate_block( std::size_t block, std::span<const std::uint64_t> inputs,
                              std::vector<std::uint64_t>& values ) const
{
  values.resize( gates_.size() * block );
  for ( std::size_t i = 0; i < gates_.size(); ++i )
  {
    auto const& g = gates_[i];
    auto* out = values.data() + i * block;
    auto operand = [&]( std::size_t k ) { return values.data() + g.fanins[k].index * block; };
    switch ( g.kind )
    {
    case gate_kind::input:
      std::copy_n( inputs.data() + ( g.var - 1u ) * block, block, out );
      break;
    case gate_kind::const1:
      std::fill_n( out, block, ~std::uint64_t{ 0 } );
      break;
    case gate_kind::and_gate:
    {
      auto const* a = operand( 0 );
      auto const* b = operand( 1 );
      for ( std::size_t w = 0; w < block; ++w )
      {
        out[w] = a[w] & b[w];
      }
      break;
    }
    case gate_kind::not_gate:
    {
      auto const* a = operand( 0 );
      for ( std::size_t w = 0; w < block; ++w )
      {
        out[w] = ~a[w];
      }
      break;
    }
    case gate_kind::xor_gate:
    {
      std::copy_n( operand( 0 ), block, out );
      for ( std::size_t k = 1; k < g.fanins.size(); ++k )
      {
        auto const* a = operand( k );
        for ( std::size_t w = 0; w < block; ++w )
        {
          out[w] ^= a[w];
        }
      }
      break;
    }
    }
  }
}

std::vector<std::uint64_t> circuit::simulate( std::span<const std::uint64_t> input_words ) const
{
  if ( input_words.size() != arity_ )
  {
    throw std::invalid_argument( "expected " + std::to_string( arity_ ) + " input words, got " + std::to_string( input_words.size() ) );
  }
  std::vector<std::uint64_t> values;
  simulate_block( 1u, input_words, values );
  std::vector<std::uint64_t> result;
  result.reserve( outputs_.size() );
  for ( auto const& o : outputs_ )
  {
    result.push_back( values[o.node.index] );
  }
  return result;
}

std::vector<bool> circuit::eval( std::vector<bool> const& input ) const
{
  if ( input.size() != arity_ )
  {
    throw std::invalid_argument( "expected " + std::to_string( arity_ ) + " input bits, got " + std::to_string( input.size() ) );
  }
  std::vector<std::uint64_t> words( arity_ );
  for ( std::size_t j = 0; j < arity_; ++j )
  {
    words[j] = input[j] ? 1u : 0u;
  }
  auto const out = simulate( words );
  std::vector<bool> result( out.size() );
  for ( std::size_t k = 0; k < out.size(); ++k )
  {
    result[k] = out[k] & 1u;
  }
  return result;
}

std::vector<truth_table> circuit::eval_all() const
{
  if ( arity_ > max_dense_arity )
  {
    throw std::invalid_argument( "arity " + std::to_string( arity_ ) + " too large for exhaustive evaluation (max " + std::to_string( max_dense_arity ) + ")" );
  }
  std::vector<truth_table> tables( outputs_.size(), truth_table( arity_ ) );
  auto const total = tables.empty() ? truth_table( arity_ ).words().size() : tables.front().words().size();
  auto const block = std::min( total, eval_all_block );

  std::vector<std::uint64_t> inputs( arity_ * block );
  std::vector<std::uint64_t> values;
  for ( std::size_t start = 0; start < total; start += block )
  {
    for ( unsigned j = 0; j < arity_; ++j )
    {
      for ( std::size_t k = 0; k < block; ++k )
      {
        auto const word = start + k;
        inputs[j * block + k] = j < 6u ? lane_patterns[j]
                                       : ( ( ( word >> ( j - 6u ) ) & 1u ) ? ~std::uint64_t{ 0 } : 0u );
      }
    }
    simulate_block( block, inputs, values );
    for ( std::size_t o = 0; o < outputs_.size(); ++o )
    {
      auto const* src = values.data() + outputs_[o].node.index * block;
      std::copy_n( src, block, tables[o].words().data() + start );
    }
  }
  for ( auto& t : tables )
  {
    t.mask_padding();
  }
  return tables;
}

std::vector<bool> circuit::reachable() const
{
  std::vector<bool> mark( gates_.size(), false );
  for ( auto const& o : outputs_ )
  {
    mark[o.node.index] = true;
  }
  for ( auto i = gates_.size(); i-- > 0; )
  {
    if ( mark[i] )
    {
      for ( auto f : gates_[i].fanins )
      {
        mark[f.index] = true;
      }
    }
  }
  return mark;
}

std::size_t circuit::and_count() const
{
  auto const mark = reachable();
  std::size_t count = 0u;
  for ( std::size_t i = 0; i < gates_.size(); ++i )
  {
    if ( mark[i] && gates_[i].kind == gate_kind::and_gate )
    {
      ++count;
    }
  }
  return count;
}

circuit circuit::with_output( std::size_t index, gate_id node ) const
{
  auto outputs = outputs_;
  outputs.at( index ).node = node;
  return circuit( arity_, gates_, std::move( outputs ) );
}

circuit replace_not_by_xor( circuit const& c )
{
  /* ids shift by one once CONST1 is prepended */
  std::vector<gate> gates;
  gates.reserve( c.size() + 1u );
  gates.push_back( gate{ gate_kind::const1, 0u, {} } );
  gate_id const one{ 0u };
  auto shift = []( gate_id id ) { return gate_id{ id.index + 1u }; };
  for ( auto const& g : c.gates() )
  {
    gate copy = g;
    for ( auto& f : copy.fanins )
    {
      f = shift( f );
    }
    if ( copy.kind == gate_kind::not_gate )
    {
      copy.kind = gate_kind::xor_gate;
      copy.fanins.insert( copy.fanins.begin(), one );
    }
    gates.push_back( std::move( copy ) );
  }
  auto outputs = c.outputs();
  for ( auto& o : outputs )
  {
    o.node = shift( o.node );
  }
  return circuit( c.arity(), std::move( gates ), std::move( outputs ) );
}

/* circuit_builder */

circuit_builder::circuit_builder( unsigned arity )
    : arity_( arity ), inputs_( arity + 1u )
{
}

gate_id circuit_builder::input( unsigned var )
{
  if ( var < 1u || var > arity_ )
  {
    throw std::invalid_argument( "input x" + std::to_string( var ) + " out of range 1.." + std::to_string( arity_ ) );
  }
  if ( inputs_[var] )
  {
    throw std::invalid_argument( "input x" + std::to_string( var ) + " already added" );
  }
  gate_id const id{ static_cast<std::uint32_t>( gates_.size() ) };
  gates_.push_back( gate{ gate_kind::input, var, {} } );
  inputs_[var] = id;
  return id;
}

gate_id circuit_builder::input_node( unsigned var ) const
{
  if ( var < 1u || var > arity_ || !inputs_[var] )
  {
    throw std::invalid_argument( "input x" + std::to_string( var ) + " has not been added" );
  }
  return *inputs_[var];
}

std::vector<gate_id> circuit_builder::inputs()
{
  std::vector<gate_id> ids;
  ids.reserve( arity_ );
  for ( auto v = 1u; v <= arity_; ++v )
  {
    ids.push_back( input( v ) );
  }
  return ids;
}

void circuit_builder::check_operand( gate_id id ) const
{
  if ( id.index >= gates_.size() )
  {
    throw std::invalid_argument( "unknown operand " + describe( id ) );
  }
}

gate_id circuit_builder::intern( gate_kind kind, std::vector<gate_id> fanins )
{
  std::size_t h = 0xcbf29ce484222325ull ^ static_cast<std::size_t>( kind );
  for ( auto f : fanins )
  {
    check_operand( f );
    h ^= f.index + 0x9e3779b97f4a7c15ull + ( h << 6u ) + ( h >> 2u );
  }
  auto [first, last] = strash_.equal_range( h );
  for ( auto it = first; it != last; ++it )
  {
    auto const& g = gates_[it->second.index];
    if ( g.kind == kind && g.fanins == fanins )
    {
      return it->second;
    }
  }
  gate_id const id{ static_cast<std::uint32_t>( gates_.size() ) };
  gates_.push_back( gate{ kind, 0u, std::move( fanins ) } );
  strash_.emplace( h, id );
  if ( kind == gate_kind::and_gate )
  {
    ++num_ands_;
  }
  return id;
}

gate_id circuit_builder::constant_one()
{
  return intern( gate_kind::const1, {} );
}

gate_id circuit_builder::make_and( gate_id a, gate_id b )
{
  return intern( gate_kind::and_gate, { a, b } );
}

gate_id circuit_builder::make_xor( gate_id a, gate_id b )
{
  return intern( gate_kind::xor_gate, { a, b } );
}

gate_id circuit_builder::make_xor( std::span<const gate_id> operands )
{
  if ( operands.size() < 2u )
  {
    throw std::invalid_argument( "XOR needs at least two operands" );
  }
  return intern( gate_kind::xor_gate, std::vector<gate_id>( operands.begin(), operands.end() ) );
}

gate_id circuit_builder::make_not( gate_id a )
{
  return intern( gate_kind::not_gate, { a } );
}

void circuit_builder::add_output( gate_id node, std::string label )
{
  check_operand( node );
  outputs_.push_back( circuit_output{ node, std::move( label ) } );
}

circuit circuit_builder::build() const
{
  return circuit( arity_, gates_, outputs_ );
}

} // namespace mcxag
