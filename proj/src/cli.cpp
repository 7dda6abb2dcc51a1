#include <mcxag/cli.hpp>

#include <mcxag/io.hpp>
#include <mcxag/synth.hpp>
#include <mcxag/verify.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

namespace mcxag
{

namespace
{

/* outputs at most this arity get their degree from the circuit itself */
constexpr unsigned max_circuit_degree_arity = 16u;

class usage_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/* writes to a sibling temporary and renames it over `path` */
void write_atomically( std::string const& path, std::string const& content )
{
  namespace fs = std::filesystem;
  fs::path const target( path );
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os( tmp, std::ios::binary | std::ios::trunc );
    if ( !os )
    {
      throw usage_error( "cannot open '" + tmp.string() + "' for writing" );
    }
    os << content;
    if ( !os.flush() )
    {
      throw usage_error( "failed to write '" + tmp.string() + "'" );
    }
  }
  std::error_code ec;
  fs::rename( tmp, target, ec );
  if ( ec )
  {
    fs::remove( tmp );
    throw usage_error( "cannot rename '" + tmp.string() + "' to '" + path + "': " + ec.message() );
  }
}

void emit( std::string const& path, std::string const& content, std::ostream& out )
{
  if ( path.empty() || path == "-" )
  {
    out << content;
  }
  else
  {
    write_atomically( path, content );
  }
}

std::vector<unsigned> output_degree_bounds( unsigned n, circuit const& c, std::string& source )
{
  std::vector<unsigned> bounds;
  if ( n <= max_circuit_degree_arity )
  {
    source = "circuit";
    for ( auto const& table : c.eval_all() )
    {
      bounds.push_back( degree_lower_bound( to_anf( table ) ) );
    }
  }
  else
  {
    source = "reference";
    for ( unsigned i = 1; i <= n; ++i )
    {
      bounds.push_back( degree_lower_bound( reference_anf( n, i ) ) );
    }
  }
  return bounds;
}

struct synth_options
{
  unsigned n{ 0u };
  std::string construction{ "optimal" };
  std::string format{ "bristol" };
  std::string out;
};

int run_synth( synth_options const& o, std::ostream& out, std::ostream& err )
{
  auto const kind = parse_construction( o.construction );
  auto const p = plan( o.n, kind );
  std::string text;
  if ( o.format == "bristol" )
  {
    text = export_bristol( p.result );
  }
  else if ( o.format == "dot" )
  {
    text = export_dot( p.result );
  }
  else
  {
    text = circuit_to_json( p.result, kind );
  }
  emit( o.out, text, out );

  err << "and_count: " << p.result.and_count() << " (expected " << expected_and_count( o.n, kind ) << ")\n";
  if ( kind == construction::optimal )
  {
    err << "stage budget: stage1=" << p.stage_ands[0] << " stage2=" << p.stage_ands[1] << " stage3=" << p.stage_ands[2] << "\n";
  }
  else
  {
    err << "stage budget: prefix=" << p.stage_ands[0] << " suffix=" << p.stage_ands[1] << " combine=" << p.stage_ands[2] << "\n";
  }
  return exit_ok;
}

struct verify_options
{
  unsigned n{ 0u };
  std::string construction{ "optimal" };
  std::string mode{ "exhaustive" };
  std::size_t samples{ 10000u };
  std::uint64_t seed{ 42u };
  std::optional<std::size_t> expect_ands;
  std::string report;
};

int run_verify( verify_options const& o, std::ostream& out )
{
  auto const kind = parse_construction( o.construction );
  auto const c = synthesize( o.n, kind );
  auto const report = o.mode == "exhaustive" ? check_exhaustive( c, o.expect_ands )
                                             : check_sampled( c, o.samples, o.seed, o.expect_ands );
  if ( !o.report.empty() )
  {
    emit( o.report, report_to_json( report ), out );
  }
  out << ( report.passed ? "PASS" : "FAIL" )
      << " n=" << o.n
      << " construction=" << to_string( kind )
      << " mode=" << to_string( report.mode )
      << " inputs=" << report.inputs_checked
      << " mismatches=" << report.mismatch_total
      << " and_count=" << report.and_count_observed;
  if ( report.and_count_expected )
  {
    out << " expected_ands=" << *report.and_count_expected;
  }
  out << "\n";
  return report.passed ? exit_ok : exit_verification_failed;
}

int run_lemmas( unsigned n_max, std::string const& report_path, std::ostream& out )
{
  auto const checks = check_lemma_suite( n_max );
  std::map<std::string, std::pair<std::size_t, std::size_t>> tally;
  bool all = true;
  for ( auto const& c : checks )
  {
    auto& [passed, total] = tally[c.lemma];
    ++total;
    if ( c.passed )
    {
      ++passed;
    }
    else
    {
      all = false;
      out << "FAIL " << c.lemma << " n=" << c.n << " i=" << c.i << ": " << c.detail << "\n";
    }
  }
  for ( auto const& [lemma, counts] : tally )
  {
    out << lemma << ": " << counts.first << "/" << counts.second << " passed\n";
  }
  if ( !report_path.empty() )
  {
    emit( report_path, lemma_suite_to_json( n_max, checks ), out );
  }
  out << ( all ? "PASS" : "FAIL" ) << " lemma suite up to n=" << n_max << "\n";
  return all ? exit_ok : exit_verification_failed;
}

int run_stats( unsigned n, std::ostream& out )
{
  auto const optimal = synthesize( n, construction::optimal );
  auto const baseline = synthesize( n, construction::baseline );
  std::string source;
  auto const bounds = output_degree_bounds( n, optimal, source );

  out << "n: " << n << "\n";
  out << "2n-3: " << 2u * n - 3u << "\n";
  out << "3n-6: " << 3u * n - 6u << "\n";
  out << "optimal: and_count=" << optimal.and_count() << " gates=" << optimal.size() << "\n";
  out << "baseline: and_count=" << baseline.and_count() << " gates=" << baseline.size() << "\n";
  out << "degree bound source: " << source << "\n";
  bool within = true;
  for ( std::size_t k = 0; k < bounds.size(); ++k )
  {
    out << "degree bound f_" << k + 1u << ": " << bounds[k] << "\n";
    within = within && bounds[k] <= optimal.and_count();
  }
  out << "degree bounds <= optimal and_count: " << ( within ? "yes" : "no" ) << "\n";
  return within ? exit_ok : exit_verification_failed;
}

} // namespace

int run_cli( std::vector<std::string> const& args, std::ostream& out, std::ostream& err )
{
  CLI::App app{ "AND-optimal XOR-AND circuits for all n monomials of degree n-1", "mcxag" };
  app.require_subcommand( 1 );

  auto const constructions = CLI::IsMember( { "optimal", "baseline" } );

  synth_options so;
  auto* synth = app.add_subcommand( "synth", "Synthesize a circuit and write it out" );
  synth->add_option( "--n", so.n, "Number of inputs (>= 3)" )->required();
  synth->add_option( "--construction", so.construction, "optimal or baseline" )->check( constructions );
  synth->add_option( "--format", so.format, "bristol, dot or json" )->check( CLI::IsMember( { "bristol", "dot", "json" } ) );
  synth->add_option( "--out", so.out, "Output path (stdout when omitted)" );

  verify_options vo;
  auto* verify = app.add_subcommand( "verify", "Check a construction against the reference function" );
  verify->add_option( "--n", vo.n, "Number of inputs (>= 3)" )->required();
  verify->add_option( "--construction", vo.construction, "optimal or baseline" )->check( constructions );
  verify->add_option( "--mode", vo.mode, "exhaustive or sample" )->check( CLI::IsMember( { "exhaustive", "sample" } ) );
  verify->add_option( "--samples", vo.samples, "Random samples in sample mode" )->check( CLI::PositiveNumber );
  verify->add_option( "--seed", vo.seed, "Seed for sample mode" );
  verify->add_option( "--expect-ands", vo.expect_ands, "Required AND count" );
  verify->add_option( "--report", vo.report, "Write the JSON report to this path" );

  unsigned max_n = 12u;
  std::string lemma_report;
  auto* lemmas = app.add_subcommand( "lemmas", "Run the symbolic lemma suite" );
  lemmas->add_option( "--max-n", max_n, "Largest n to check (3..16)" )->required();
  lemmas->add_option( "--report", lemma_report, "Write the JSON results to this path" );

  unsigned stats_n = 0u;
  auto* stats = app.add_subcommand( "stats", "Print AND counts and degree bounds" );
  stats->add_option( "--n", stats_n, "Number of inputs (>= 3)" )->required();

  std::vector<std::string> argv_storage{ "mcxag" };
  argv_storage.insert( argv_storage.end(), args.begin(), args.end() );
  std::vector<char const*> argv;
  for ( auto const& a : argv_storage )
  {
    argv.push_back( a.c_str() );
  }

  try
  {
    app.parse( static_cast<int>( argv.size() ), argv.data() );
  }
  catch ( CLI::Success const& e )
  {
    return app.exit( e, out, err );
  }
  catch ( CLI::ParseError const& e )
  {
    err << "error: " << e.what() << "\n\n" << app.help();
    return exit_usage;
  }

  CLI::App const* active = app.get_subcommands().front();
  try
  {
    if ( active == synth )
    {
      return run_synth( so, out, err );
    }
    if ( active == verify )
    {
      return run_verify( vo, out );
    }
    if ( active == lemmas )
    {
      return run_lemmas( max_n, lemma_report, out );
    }
    return run_stats( stats_n, out );
  }
  catch ( std::invalid_argument const& e )
  {
    err << "error: " << e.what() << "\n\n" << active->help();
    return exit_usage;
  }
  catch ( usage_error const& e )
  {
    err << "error: " << e.what() << "\n";
    return exit_usage;
  }
}

} // namespace mcxag
