#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace mcxag
{

/*! \brief Largest arity accepted by the dense truth-table path (2^24 bits). */
inline constexpr unsigned max_dense_arity = 24u;

/*! \brief Product of distinct variables over GF(2).

  Variables are 1-based (x_1 .. x_n).  The set is stored as a bitset whose
  width is fixed by the arity, so equality of monomials is equality of
  their variable sets.  The empty set is the constant-1 monomial.
*/
class monomial
{
public:
  monomial() = default;
  explicit monomial( unsigned arity );

  static monomial of( unsigned arity, std::initializer_list<unsigned> vars );
  static monomial of( unsigned arity, std::span<const unsigned> vars );

  /*! \brief All variables of x_1..x_n except `var`. */
  static monomial all_but( unsigned arity, unsigned var );
  static monomial all( unsigned arity );

  unsigned arity() const noexcept { return arity_; }
  unsigned degree() const noexcept;
  bool is_one() const noexcept;
  bool contains( unsigned var ) const;
  std::vector<unsigned> variables() const;

  /*! \brief Integer whose bit j-1 is set iff x_j is present (arity <= 64). */
  std::uint64_t mask() const;

  /* x * x = x, so the product is the union of the variable sets */
  friend monomial operator*( monomial const& a, monomial const& b );

  friend bool operator==( monomial const&, monomial const& ) = default;
  friend std::strong_ordering operator<=>( monomial const& a, monomial const& b );

  /*! \brief "x1x3x4", or "1" for the constant monomial. */
  std::string to_string() const;

private:
  void set( unsigned var );

  unsigned arity_{ 0u };
  std::vector<std::uint64_t> words_;
};

/*! \brief Single-output Boolean function stored as a dense bit vector.

  Entry `x` holds f(x), where bit j-1 of `x` is the value of x_j.
*/
class truth_table
{
public:
  explicit truth_table( unsigned arity );

  unsigned arity() const noexcept { return arity_; }
  std::uint64_t num_bits() const noexcept { return std::uint64_t{ 1 } << arity_; }

  bool get( std::uint64_t x ) const;
  void set( std::uint64_t x, bool value );

  std::span<const std::uint64_t> words() const noexcept { return words_; }
  std::span<std::uint64_t> words() noexcept { return words_; }

  /*! \brief Clears padding bits when arity < 6. */
  void mask_padding() noexcept;

  std::uint64_t count_ones() const noexcept;

  /*! \brief Entries in index order, entry 0 first. */
  std::string to_string() const;

  friend bool operator==( truth_table const&, truth_table const& ) = default;

private:
  unsigned arity_;
  std::vector<std::uint64_t> words_;
};

/*! \brief Multilinear polynomial over GF(2), the XOR of its terms.

  Terms are kept sorted and free of duplicates, so two `anf` values are
  equal iff they denote the same Boolean function.
*/
class anf
{
public:
  explicit anf( unsigned arity );

  /*! \brief Sums the given monomials; duplicated monomials cancel in pairs. */
  anf( unsigned arity, std::vector<monomial> terms );

  static anf one( unsigned arity );
  static anf variable( unsigned arity, unsigned var );
  static anf xor_of_variables( unsigned arity, std::span<const unsigned> vars );
  static anf xor_of_variables( unsigned arity, std::initializer_list<unsigned> vars );

  unsigned arity() const noexcept { return arity_; }
  std::vector<monomial> const& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool contains( monomial const& m ) const;

  std::string to_string() const;

  friend bool operator==( anf const&, anf const& ) = default;

private:
  unsigned arity_;
  std::vector<monomial> terms_;
};

/*! \brief Sum over GF(2): symmetric difference of the term sets. */
anf operator^( anf const& a, anf const& b );

/*! \brief Product over GF(2); pairwise products that coincide cancel. */
anf operator*( anf const& a, anf const& b );

/*! \brief Largest term degree; the zero polynomial has degree 0. */
unsigned degree( anf const& a );

/*! \brief Moebius transform of a truth table. */
anf to_anf( truth_table const& table );

/*! \brief Pointwise evaluation of the polynomial on all 2^arity inputs. */
truth_table to_truth_table( anf const& a );

/*! \brief In-place GF(2) Moebius transform; it is its own inverse. */
void moebius_transform( truth_table& table );

} // namespace mcxag
