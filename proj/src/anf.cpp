#include <mcxag/anf.hpp>

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace mcxag
{

namespace
{

constexpr std::size_t words_for( unsigned arity )
{
  return ( arity + 63u ) / 64u;
}

void check_var( unsigned arity, unsigned var )
{
  if ( var < 1u || var > arity )
  {
    throw std::invalid_argument( "variable x" + std::to_string( var ) + " out of range 1.." + std::to_string( arity ) );
  }
}

void check_same_arity( anf const& a, anf const& b )
{
  if ( a.arity() != b.arity() )
  {
    throw std::invalid_argument( "ANF arity mismatch: " + std::to_string( a.arity() ) + " vs " + std::to_string( b.arity() ) );
  }
}

/* sorts and drops pairs of equal monomials */
std::vector<monomial> reduce_mod2( std::vector<monomial> terms )
{
  std::sort( terms.begin(), terms.end() );
  std::vector<monomial> result;
  result.reserve( terms.size() );
  for ( std::size_t i = 0; i < terms.size(); )
  {
    std::size_t j = i + 1;
    while ( j < terms.size() && terms[j] == terms[i] )
    {
      ++j;
    }
    if ( ( j - i ) % 2u == 1u )
    {
      result.push_back( std::move( terms[i] ) );
    }
    i = j;
  }
  return result;
}

/* masks of indices whose bit j is 0, for j < 6 */
constexpr std::uint64_t low_half_masks[6] = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
    0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull };

} // namespace

/* monomial */

monomial::monomial( unsigned arity )
    : arity_( arity ), words_( words_for( arity ), 0u )
{
}

monomial monomial::of( unsigned arity, std::initializer_list<unsigned> vars )
{
  return of( arity, std::span<const unsigned>( vars.begin(), vars.size() ) );
}

monomial monomial::of( unsigned arity, std::span<const unsigned> vars )
{
  monomial m( arity );
  for ( auto v : vars )
  {
    m.set( v );
  }
  return m;
}

monomial monomial::all_but( unsigned arity, unsigned var )
{
  check_var( arity, var );
  monomial m( arity );
  for ( auto v = 1u; v <= arity; ++v )
  {
    if ( v != var )
    {
      m.set( v );
    }
  }
  return m;
}

monomial monomial::all( unsigned arity )
{
  monomial m( arity );
  for ( auto v = 1u; v <= arity; ++v )
  {
    m.set( v );
  }
  return m;
}

void monomial::set( unsigned var )
{
  check_var( arity_, var );
  words_[( var - 1u ) / 64u] |= std::uint64_t{ 1 } << ( ( var - 1u ) % 64u );
}

unsigned monomial::degree() const noexcept
{
  unsigned d = 0u;
  for ( auto w : words_ )
  {
    d += static_cast<unsigned>( std::popcount( w ) );
  }
  return d;
}

bool monomial::is_one() const noexcept
{
  return std::all_of( words_.begin(), words_.end(), []( auto w ) { return w == 0u; } );
}

bool monomial::contains( unsigned var ) const
{
  check_var( arity_, var );
  return ( words_[( var - 1u ) / 64u] >> ( ( var - 1u ) % 64u ) ) & 1u;
}

std::vector<unsigned> monomial::variables() const
{
  std::vector<unsigned> vars;
  for ( std::size_t w = 0; w < words_.size(); ++w )
  {
    for ( auto bits = words_[w]; bits != 0u; bits &= bits - 1u )
    {
      vars.push_back( static_cast<unsigned>( w * 64u + std::countr_zero( bits ) ) + 1u );
    }
  }
  return vars;
}

std::uint64_t monomial::mask() const
{
  if ( arity_ > 64u )
  {
    throw std::invalid_argument( "monomial mask requires arity <= 64" );
  }
  return words_.empty() ? 0u : words_.front();
}

monomial operator*( monomial const& a, monomial const& b )
{
  if ( a.arity_ != b.arity_ )
  {
    throw std::invalid_argument( "monomial arity mismatch" );
  }
  monomial r = a;
  for ( std::size_t w = 0; w < r.words_.size(); ++w )
  {
    r.words_[w] |= b.words_[w];
  }
  return r;
}

std::strong_ordering operator<=>( monomial const& a, monomial const& b )
{
  if ( auto c = a.arity_ <=> b.arity_; c != 0 )
  {
    return c;
  }
  /* most significant word first, so that arity <= 64 orders by mask() */
  for ( auto w = a.words_.size(); w-- > 0; )
  {
    if ( auto c = a.words_[w] <=> b.words_[w]; c != 0 )
    {
      return c;
    }
  }
  return std::strong_ordering::equal;
}

std::string monomial::to_string() const
{
  if ( is_one() )
  {
    return "1";
  }
  std::string s;
  for ( auto v : variables() )
  {
    s += 'x';
    s += std::to_string( v );
  }
  return s;
}

/* truth_table */

truth_table::truth_table( unsigned arity )
    : arity_( arity )
{
  if ( arity > max_dense_arity )
  {
    throw std::invalid_argument( "truth table arity " + std::to_string( arity ) + " exceeds " + std::to_string( max_dense_arity ) );
  }
  words_.assign( arity <= 6u ? 1u : ( std::size_t{ 1 } << ( arity - 6u ) ), 0u );
}

bool truth_table::get( std::uint64_t x ) const
{
  if ( x >= num_bits() )
  {
    throw std::out_of_range( "truth table index out of range" );
  }
  return ( words_[x >> 6u] >> ( x & 63u ) ) & 1u;
}

void truth_table::set( std::uint64_t x, bool value )
{
  if ( x >= num_bits() )
  {
    throw std::out_of_range( "truth table index out of range" );
  }
  auto const bit = std::uint64_t{ 1 } << ( x & 63u );
  if ( value )
  {
    words_[x >> 6u] |= bit;
  }
  else
  {
    words_[x >> 6u] &= ~bit;
  }
}

void truth_table::mask_padding() noexcept
{
  if ( arity_ < 6u )
  {
    words_.front() &= ( std::uint64_t{ 1 } << num_bits() ) - 1u;
  }
}

std::uint64_t truth_table::count_ones() const noexcept
{
  std::uint64_t c = 0u;
  for ( auto w : words_ )
  {
    c += static_cast<std::uint64_t>( std::popcount( w ) );
  }
  return c;
}

std::string truth_table::to_string() const
{
  std::string s( num_bits(), '0' );
  for ( std::uint64_t x = 0; x < num_bits(); ++x )
  {
    if ( get( x ) )
    {
      s[x] = '1';
    }
  }
  return s;
}

/* anf */

anf::anf( unsigned arity )
    : arity_( arity )
{
}

anf::anf( unsigned arity, std::vector<monomial> terms )
    : arity_( arity )
{
  for ( auto const& m : terms )
  {
    if ( m.arity() != arity )
    {
      throw std::invalid_argument( "monomial arity " + std::to_string( m.arity() ) + " does not match ANF arity " + std::to_string( arity ) );
    }
  }
  terms_ = reduce_mod2( std::move( terms ) );
}

anf anf::one( unsigned arity )
{
  return anf( arity, { monomial( arity ) } );
}

anf anf::variable( unsigned arity, unsigned var )
{
  return anf( arity, { monomial::of( arity, { var } ) } );
}

anf anf::xor_of_variables( unsigned arity, std::span<const unsigned> vars )
{
  std::vector<monomial> terms;
  terms.reserve( vars.size() );
  for ( auto v : vars )
  {
    terms.push_back( monomial::of( arity, { v } ) );
  }
  return anf( arity, std::move( terms ) );
}

anf anf::xor_of_variables( unsigned arity, std::initializer_list<unsigned> vars )
{
  return xor_of_variables( arity, std::span<const unsigned>( vars.begin(), vars.size() ) );
}

bool anf::contains( monomial const& m ) const
{
  return std::binary_search( terms_.begin(), terms_.end(), m );
}

std::string anf::to_string() const
{
  if ( terms_.empty() )
  {
    return "0";
  }
  std::string s;
  for ( auto const& m : terms_ )
  {
    if ( !s.empty() )
    {
      s += " + ";
    }
    s += m.to_string();
  }
  return s;
}

anf operator^( anf const& a, anf const& b )
{
  check_same_arity( a, b );
  std::vector<monomial> terms;
  terms.reserve( a.size() + b.size() );
  std::set_symmetric_difference( a.terms().begin(), a.terms().end(),
                                 b.terms().begin(), b.terms().end(),
                                 std::back_inserter( terms ) );
  return anf( a.arity(), std::move( terms ) );
}

anf operator*( anf const& a, anf const& b )
{
  check_same_arity( a, b );
  std::vector<monomial> products;
  products.reserve( a.size() * b.size() );
  for ( auto const& ma : a.terms() )
  {
    for ( auto const& mb : b.terms() )
    {
      products.push_back( ma * mb );
    }
  }
  return anf( a.arity(), std::move( products ) );
}

unsigned degree( anf const& a )
{
  unsigned d = 0u;
  for ( auto const& m : a.terms() )
  {
    d = std::max( d, m.degree() );
  }
  return d;
}

void moebius_transform( truth_table& table )
{
  auto words = table.words();
  auto const in_word = std::min( table.arity(), 6u );
  for ( auto j = 0u; j < in_word; ++j )
  {
    auto const shift = 1u << j;
    for ( auto& w : words )
    {
      w ^= ( w & low_half_masks[j] ) << shift;
    }
  }
  for ( auto j = 6u; j < table.arity(); ++j )
  {
    auto const step = std::size_t{ 1 } << ( j - 6u );
    for ( std::size_t k = 0; k < words.size(); ++k )
    {
      if ( ( k & step ) == 0u )
      {
        words[k | step] ^= words[k];
      }
    }
  }
}

anf to_anf( truth_table const& table )
{
  auto coefficients = table;
  moebius_transform( coefficients );
  std::vector<monomial> terms;
  auto const n = table.arity();
  std::vector<unsigned> vars;
  for ( std::uint64_t x = 0; x < coefficients.num_bits(); ++x )
  {
    if ( !coefficients.get( x ) )
    {
      continue;
    }
    vars.clear();
    for ( auto j = 0u; j < n; ++j )
    {
      if ( ( x >> j ) & 1u )
      {
        vars.push_back( j + 1u );
      }
    }
    terms.push_back( monomial::of( n, vars ) );
  }
  return anf( n, std::move( terms ) );
}

truth_table to_truth_table( anf const& a )
{
  truth_table table( a.arity() );
  for ( auto const& m : a.terms() )
  {
    auto const x = m.mask();
    table.set( x, !table.get( x ) );
  }
  moebius_transform( table );
  return table;
}

} // namespace mcxag
