#include <mcxag/anf.hpp>
#include <mcxag/io.hpp>
#include <mcxag/synth.hpp>
#include <mcxag/verify.hpp>
#include <mcxag/xag.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace mcxag;

namespace
{

anf anf_from_terms( unsigned arity, std::vector<std::vector<unsigned>> const& terms )
{
  std::vector<monomial> monomials;
  monomials.reserve( terms.size() );
  for ( auto const& vars : terms )
  {
    monomials.push_back( monomial::of( arity, vars ) );
  }
  return anf( arity, std::move( monomials ) );
}

std::vector<std::vector<unsigned>> anf_terms( anf const& a )
{
  std::vector<std::vector<unsigned>> terms;
  for ( auto const& m : a.terms() )
  {
    terms.push_back( m.variables() );
  }
  return terms;
}

truth_table table_from_string( unsigned arity, std::string const& bits )
{
  truth_table t( arity );
  if ( bits.size() != t.num_bits() )
  {
    throw std::invalid_argument( "expected " + std::to_string( t.num_bits() ) + " table entries" );
  }
  for ( std::size_t x = 0; x < bits.size(); ++x )
  {
    t.set( x, bits[x] == '1' );
  }
  return t;
}

py::dict report_dict( verification_report const& r )
{
  py::list mismatches;
  for ( auto const& m : r.mismatches )
  {
    mismatches.append( py::dict( py::arg( "input" ) = m.input, py::arg( "output" ) = m.output + 1u,
                                 py::arg( "expected" ) = m.expected, py::arg( "got" ) = m.got ) );
  }
  py::dict d;
  d["mode"] = std::string( to_string( r.mode ) );
  d["samples"] = r.samples;
  d["seed"] = r.seed;
  d["arity"] = r.arity;
  d["inputs_checked"] = r.inputs_checked;
  d["outputs_checked"] = r.outputs_checked;
  d["mismatch_count"] = r.mismatch_total;
  d["mismatches"] = mismatches;
  d["and_count_observed"] = r.and_count_observed;
  d["and_count_expected"] = r.and_count_expected;
  d["passed"] = r.passed;
  return d;
}

} // namespace

PYBIND11_MODULE( _core, m )
{
  m.doc() = "AND-optimal XOR-AND circuits for all n monomials of degree n-1";

  py::register_exception<parse_error>( m, "ParseError", PyExc_ValueError );

  py::enum_<construction>( m, "Construction" )
      .value( "OPTIMAL", construction::optimal )
      .value( "BASELINE", construction::baseline );

  py::class_<anf>( m, "Anf" )
      .def( py::init( &anf_from_terms ), py::arg( "arity" ), py::arg( "terms" ) = std::vector<std::vector<unsigned>>{},
            "Polynomial from a list of monomials, each a list of 1-based variable indices." )
      .def_static( "from_truth_table", []( unsigned arity, std::string const& bits ) { return to_anf( table_from_string( arity, bits ) ); } )
      .def_property_readonly( "arity", &anf::arity )
      .def( "terms", &anf_terms )
      .def( "degree", []( anf const& a ) { return degree( a ); } )
      .def( "truth_table", []( anf const& a ) { return to_truth_table( a ).to_string(); } )
      .def( "__xor__", []( anf const& a, anf const& b ) { return a ^ b; } )
      .def( "__mul__", []( anf const& a, anf const& b ) { return a * b; } )
      .def( "__eq__", []( anf const& a, anf const& b ) { return a == b; } )
      .def( "__len__", &anf::size )
      .def( "__repr__", []( anf const& a ) { return "Anf(" + a.to_string() + ")"; } );

  py::class_<circuit>( m, "Circuit" )
      .def_property_readonly( "arity", &circuit::arity )
      .def_property_readonly( "num_gates", &circuit::size )
      .def_property_readonly( "num_outputs", &circuit::num_outputs )
      .def_property_readonly( "output_labels", []( circuit const& c ) {
        std::vector<std::string> labels;
        for ( auto const& o : c.outputs() )
        {
          labels.push_back( o.label );
        }
        return labels;
      } )
      .def( "and_count", &circuit::and_count )
      .def( "eval", &circuit::eval, py::arg( "input" ) )
      .def( "eval_all", []( circuit const& c ) {
        std::vector<std::string> tables;
        for ( auto const& t : c.eval_all() )
        {
          tables.push_back( t.to_string() );
        }
        return tables;
      } )
      .def( "to_bristol", &export_bristol )
      .def( "to_dot", &export_dot )
      .def( "to_json", []( circuit const& c ) { return circuit_to_json( c ); } );

  m.def( "synthesize", &synthesize, py::arg( "n" ), py::arg( "construction" ) = construction::optimal );
  m.def( "stage_and_counts", []( unsigned n, construction kind ) { return plan( n, kind ).stage_ands; },
         py::arg( "n" ), py::arg( "construction" ) = construction::optimal );
  m.def( "expected_and_count", &expected_and_count, py::arg( "n" ), py::arg( "construction" ) = construction::optimal );
  m.def( "degree_lower_bound", &degree_lower_bound );

  m.def( "reference_f", py::overload_cast<std::vector<bool> const&>( &reference_f ), py::arg( "input" ) );
  m.def( "check_exhaustive", []( circuit const& c, std::optional<std::size_t> expected ) { return report_dict( check_exhaustive( c, expected ) ); },
         py::arg( "circuit" ), py::arg( "expected_and_count" ) = py::none() );
  m.def( "check_sampled", []( circuit const& c, std::size_t count, std::uint64_t seed, std::optional<std::size_t> expected ) {
        return report_dict( check_sampled( c, count, seed, expected ) );
      },
         py::arg( "circuit" ), py::arg( "count" ), py::arg( "seed" ), py::arg( "expected_and_count" ) = py::none() );
  m.def( "check_lemma_suite", []( unsigned n_max ) {
    py::list results;
    for ( auto const& c : check_lemma_suite( n_max ) )
    {
      results.append( py::dict( py::arg( "lemma" ) = c.lemma, py::arg( "n" ) = c.n, py::arg( "i" ) = c.i,
                                py::arg( "passed" ) = c.passed, py::arg( "detail" ) = c.detail ) );
    }
    return results;
  } );

  m.def( "import_bristol", []( std::string const& text ) { return import_bristol( text ); } );
  m.def( "circuit_from_json", []( std::string const& text ) { return circuit_from_json( text ); } );
}
