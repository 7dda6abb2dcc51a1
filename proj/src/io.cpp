#include <mcxag/io.hpp>

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace mcxag
{

namespace
{

using json = nlohmann::ordered_json;

constexpr std::size_t npos = static_cast<std::size_t>( -1 );

std::string wire_line( std::uint64_t a, std::uint64_t b, std::uint64_t out, char const* op )
{
  return "2 1 " + std::to_string( a ) + " " + std::to_string( b ) + " " + std::to_string( out ) + " " + op;
}

std::string inv_line( std::uint64_t a, std::uint64_t out )
{
  return "1 1 " + std::to_string( a ) + " " + std::to_string( out ) + " INV";
}

std::vector<std::string_view> split_tokens( std::string_view line )
{
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while ( i < line.size() )
  {
    while ( i < line.size() && std::isspace( static_cast<unsigned char>( line[i] ) ) )
    {
      ++i;
    }
    auto const start = i;
    while ( i < line.size() && !std::isspace( static_cast<unsigned char>( line[i] ) ) )
    {
      ++i;
    }
    if ( i > start )
    {
      tokens.push_back( line.substr( start, i - start ) );
    }
  }
  return tokens;
}

std::uint64_t parse_number( std::string_view token, std::size_t line )
{
  std::uint64_t value = 0u;
  auto const [ptr, ec] = std::from_chars( token.data(), token.data() + token.size(), value );
  if ( ec != std::errc{} || ptr != token.data() + token.size() )
  {
    throw parse_error( line, "expected a non-negative integer, got '" + std::string( token ) + "'" );
  }
  return value;
}

/* sizes of a group declaration "<count> <size_1> ... <size_count>" */
std::uint64_t parse_group_total( std::vector<std::string_view> const& tokens, std::size_t line, char const* what )
{
  if ( tokens.empty() )
  {
    throw parse_error( line, std::string( "missing " ) + what + " declaration" );
  }
  auto const groups = parse_number( tokens[0], line );
  if ( tokens.size() != groups + 1u )
  {
    throw parse_error( line, std::string( what ) + " declaration lists " + std::to_string( tokens.size() - 1u ) + " sizes for " + std::to_string( groups ) + " groups" );
  }
  std::uint64_t total = 0u;
  for ( std::size_t k = 1; k < tokens.size(); ++k )
  {
    total += parse_number( tokens[k], line );
  }
  return total;
}

std::string_view kind_name( gate_kind kind )
{
  return to_string( kind );
}

gate_kind parse_kind( std::string const& name )
{
  for ( auto kind : { gate_kind::input, gate_kind::const1, gate_kind::and_gate, gate_kind::xor_gate, gate_kind::not_gate } )
  {
    if ( name == to_string( kind ) )
    {
      return kind;
    }
  }
  throw parse_error( 0u, "unknown gate kind '" + name + "'" );
}

std::string bits_string( std::vector<bool> const& bits )
{
  std::string s( bits.size(), '0' );
  for ( std::size_t j = 0; j < bits.size(); ++j )
  {
    if ( bits[j] )
    {
      s[j] = '1';
    }
  }
  return s;
}

} // namespace

parse_error::parse_error( std::size_t line, std::string const& message )
    : std::runtime_error( line == 0u ? message : "line " + std::to_string( line ) + ": " + message ), line_( line )
{
}

/* Bristol */

std::string export_bristol( circuit const& c )
{
  if ( c.num_outputs() == 0u )
  {
    throw std::invalid_argument( "cannot export a circuit without outputs" );
  }
  if ( c.arity() == 0u )
  {
    throw std::invalid_argument( "cannot export a circuit without inputs" );
  }
  auto const& gates = c.gates();
  auto const reach = c.reachable();
  auto const n = c.arity();
  auto const m = c.num_outputs();

  std::vector<bool> has_fanout( gates.size(), false );
  for ( std::size_t i = 0; i < gates.size(); ++i )
  {
    if ( reach[i] )
    {
      for ( auto f : gates[i].fanins )
      {
        has_fanout[f.index] = true;
      }
    }
  }
  std::vector<std::size_t> first_output( gates.size(), npos );
  for ( std::size_t o = 0; o < m; ++o )
  {
    auto& first = first_output[c.outputs()[o].node.index];
    if ( first == npos )
    {
      first = o;
    }
  }

  /* an output gate without fanout is written directly onto its output wire; others get copied */
  auto written_at_output = [&]( std::size_t i ) {
    auto const kind = gates[i].kind;
    return first_output[i] != npos && !has_fanout[i] &&
           ( kind == gate_kind::and_gate || kind == gate_kind::xor_gate || kind == gate_kind::not_gate );
  };
  bool need_zero = false;
  for ( std::size_t i = 0; i < gates.size(); ++i )
  {
    need_zero = need_zero || ( reach[i] && gates[i].kind == gate_kind::const1 );
  }
  for ( std::size_t o = 0; o < m; ++o )
  {
    auto const node = c.outputs()[o].node.index;
    need_zero = need_zero || !written_at_output( node ) || first_output[node] != o;
  }

  std::vector<std::string> lines;
  std::vector<std::uint64_t> wire( gates.size(), 0u );
  std::vector<std::uint64_t> pending( gates.size(), 0u ); /* first operand of a deferred final step */
  std::uint64_t next = n;
  std::uint64_t zero = 0u;
  if ( need_zero )
  {
    zero = next++;
    lines.push_back( wire_line( 0u, 0u, zero, "XOR" ) );
  }

  for ( std::size_t i = 0; i < gates.size(); ++i )
  {
    if ( !reach[i] )
    {
      continue;
    }
    auto const& g = gates[i];
    bool const deferred = written_at_output( i );
    auto operand = [&]( std::size_t k ) { return wire[g.fanins[k].index]; };
    switch ( g.kind )
    {
    case gate_kind::input:
      wire[i] = g.var - 1u;
      break;
    case gate_kind::const1:
      wire[i] = next++;
      lines.push_back( inv_line( zero, wire[i] ) );
      break;
    case gate_kind::and_gate:
      if ( !deferred )
      {
        wire[i] = next++;
        lines.push_back( wire_line( operand( 0 ), operand( 1 ), wire[i], "AND" ) );
      }
      break;
    case gate_kind::not_gate:
      if ( !deferred )
      {
        wire[i] = next++;
        lines.push_back( inv_line( operand( 0 ), wire[i] ) );
      }
      break;
    case gate_kind::xor_gate:
    {
      auto acc = operand( 0 );
      auto const last = g.fanins.size() - 1u;
      for ( std::size_t k = 1; k < last; ++k )
      {
        auto const t = next++;
        lines.push_back( wire_line( acc, operand( k ), t, "XOR" ) );
        acc = t;
      }
      if ( deferred )
      {
        pending[i] = acc;
      }
      else
      {
        wire[i] = next++;
        lines.push_back( wire_line( acc, operand( last ), wire[i], "XOR" ) );
      }
      break;
    }
    }
  }

  auto const base = next;
  for ( std::size_t o = 0; o < m; ++o )
  {
    auto const i = c.outputs()[o].node.index;
    auto const out = base + o;
    auto const& g = gates[i];
    if ( !written_at_output( i ) || first_output[i] != o )
    {
      lines.push_back( wire_line( wire[i], zero, out, "XOR" ) );
      continue;
    }
    auto operand = [&]( std::size_t k ) { return wire[g.fanins[k].index]; };
    switch ( g.kind )
    {
    case gate_kind::and_gate:
      lines.push_back( wire_line( operand( 0 ), operand( 1 ), out, "AND" ) );
      break;
    case gate_kind::not_gate:
      lines.push_back( inv_line( operand( 0 ), out ) );
      break;
    default:
      lines.push_back( wire_line( pending[i], operand( g.fanins.size() - 1u ), out, "XOR" ) );
      break;
    }
    wire[i] = out;
  }

  std::string text = std::to_string( lines.size() ) + " " + std::to_string( base + m ) + "\n";
  text += "1 " + std::to_string( n ) + "\n";
  text += "1 " + std::to_string( m ) + "\n\n";
  for ( auto const& l : lines )
  {
    text += l;
    text += '\n';
  }
  return text;
}

circuit import_bristol( std::string_view text )
{
  std::vector<std::pair<std::size_t, std::vector<std::string_view>>> rows;
  std::size_t line_no = 0u;
  std::size_t pos = 0u;
  while ( pos <= text.size() )
  {
    auto const end = std::min( text.find( '\n', pos ), text.size() );
    ++line_no;
    auto tokens = split_tokens( text.substr( pos, end - pos ) );
    if ( !tokens.empty() )
    {
      rows.emplace_back( line_no, std::move( tokens ) );
    }
    pos = end + 1u;
  }
  if ( rows.size() < 3u )
  {
    throw parse_error( rows.empty() ? 1u : rows.back().first, "truncated header" );
  }

  auto const& counts = rows[0];
  if ( counts.second.size() != 2u )
  {
    throw parse_error( counts.first, "expected '<gates> <wires>'" );
  }
  auto const num_gates = parse_number( counts.second[0], counts.first );
  auto const num_wires = parse_number( counts.second[1], counts.first );
  auto const num_inputs = parse_group_total( rows[1].second, rows[1].first, "input" );
  auto const num_outputs = parse_group_total( rows[2].second, rows[2].first, "output" );
  if ( num_inputs + num_outputs > num_wires )
  {
    throw parse_error( rows[2].first, "more input and output wires than declared wires" );
  }
  if ( num_inputs > std::numeric_limits<unsigned>::max() / 2u )
  {
    throw parse_error( rows[1].first, "too many inputs" );
  }
  if ( rows.size() - 3u != num_gates )
  {
    throw parse_error( rows.back().first, "header declares " + std::to_string( num_gates ) + " gates, found " + std::to_string( rows.size() - 3u ) );
  }

  auto const n = static_cast<unsigned>( num_inputs );
  std::vector<gate> gates;
  gates.reserve( n + num_gates );
  std::vector<std::optional<gate_id>> wire_gate( num_wires );
  for ( unsigned j = 0; j < n; ++j )
  {
    wire_gate[j] = gate_id{ j };
    gates.push_back( gate{ gate_kind::input, j + 1u, {} } );
  }

  auto read_wire = [&]( std::string_view token, std::size_t line ) {
    auto const w = parse_number( token, line );
    if ( w >= num_wires )
    {
      throw parse_error( line, "wire " + std::to_string( w ) + " exceeds the declared " + std::to_string( num_wires ) + " wires" );
    }
    return w;
  };

  for ( std::size_t r = 3; r < rows.size(); ++r )
  {
    auto const& [line, tokens] = rows[r];
    if ( tokens.size() < 3u )
    {
      throw parse_error( line, "incomplete gate line" );
    }
    auto const fan_in = parse_number( tokens[0], line );
    auto const fan_out = parse_number( tokens[1], line );
    if ( tokens.size() != fan_in + fan_out + 3u )
    {
      throw parse_error( line, "gate line has " + std::to_string( tokens.size() ) + " fields, expected " + std::to_string( fan_in + fan_out + 3u ) );
    }
    auto const op = tokens.back();
    gate g;
    if ( op == "AND" || op == "XOR" )
    {
      g.kind = op == "AND" ? gate_kind::and_gate : gate_kind::xor_gate;
      if ( fan_in != 2u || fan_out != 1u )
      {
        throw parse_error( line, std::string( op ) + " must be written as '2 1 a b out'" );
      }
    }
    else if ( op == "INV" )
    {
      g.kind = gate_kind::not_gate;
      if ( fan_in != 1u || fan_out != 1u )
      {
        throw parse_error( line, "INV must be written as '1 1 a out'" );
      }
    }
    else
    {
      throw parse_error( line, "unknown operation '" + std::string( op ) + "'" );
    }
    for ( std::size_t k = 0; k < fan_in; ++k )
    {
      auto const w = read_wire( tokens[2u + k], line );
      if ( !wire_gate[w] )
      {
        throw parse_error( line, "wire " + std::to_string( w ) + " is used before it is assigned" );
      }
      g.fanins.push_back( *wire_gate[w] );
    }
    auto const out = read_wire( tokens[2u + fan_in], line );
    if ( wire_gate[out] )
    {
      throw parse_error( line, "wire " + std::to_string( out ) + " is assigned twice" );
    }
    wire_gate[out] = gate_id{ static_cast<std::uint32_t>( gates.size() ) };
    gates.push_back( std::move( g ) );
  }

  std::vector<circuit_output> outputs;
  outputs.reserve( num_outputs );
  for ( std::uint64_t o = 0; o < num_outputs; ++o )
  {
    auto const w = num_wires - num_outputs + o;
    if ( !wire_gate[w] )
    {
      throw parse_error( 0u, "output wire " + std::to_string( w ) + " is never assigned" );
    }
    outputs.push_back( circuit_output{ *wire_gate[w], "out_" + std::to_string( o + 1u ) } );
  }
  return circuit( n, std::move( gates ), std::move( outputs ) );
}

/* DOT */

std::string export_dot( circuit const& c )
{
  std::ostringstream os;
  os << "digraph xag {\n";
  auto const& gates = c.gates();
  for ( std::size_t i = 0; i < gates.size(); ++i )
  {
    auto const& g = gates[i];
    os << "  g" << i << " [label=\"";
    switch ( g.kind )
    {
    case gate_kind::input:
      os << "x_" << g.var << "\", shape=circle";
      break;
    case gate_kind::const1:
      os << "1\", shape=circle";
      break;
    default:
      os << kind_name( g.kind ) << "\"";
      break;
    }
    os << "];\n";
    for ( auto f : g.fanins )
    {
      os << "  g" << f.index << " -> g" << i << ";\n";
    }
  }
  for ( std::size_t o = 0; o < c.num_outputs(); ++o )
  {
    auto const& out = c.outputs()[o];
    os << "  o" << o << " [label=\"" << out.label << "\", shape=box];\n";
    os << "  g" << out.node.index << " -> o" << o << ";\n";
  }
  os << "}\n";
  return os.str();
}

/* JSON */

std::string circuit_to_json( circuit const& c, std::optional<construction> kind )
{
  json doc;
  doc["metadata"] = {
      { "n", c.arity() },
      { "construction", kind ? json( std::string( to_string( *kind ) ) ) : json( nullptr ) },
      { "and_count", c.and_count() } };
  auto& gates = doc["gates"] = json::array();
  for ( std::size_t i = 0; i < c.size(); ++i )
  {
    auto const& g = c.gates()[i];
    json entry = { { "id", i }, { "kind", std::string( kind_name( g.kind ) ) } };
    if ( g.kind == gate_kind::input )
    {
      entry["var"] = g.var;
    }
    auto& operands = entry["operands"] = json::array();
    for ( auto f : g.fanins )
    {
      operands.push_back( f.index );
    }
    gates.push_back( std::move( entry ) );
  }
  auto& outputs = doc["outputs"] = json::array();
  for ( auto const& o : c.outputs() )
  {
    outputs.push_back( { { "label", o.label }, { "id", o.node.index } } );
  }
  return doc.dump( 2 ) + "\n";
}

circuit circuit_from_json( std::string_view text )
{
  try
  {
    auto const doc = json::parse( text );
    auto const n = doc.at( "metadata" ).at( "n" ).get<unsigned>();
    std::vector<gate> gates;
    for ( auto const& entry : doc.at( "gates" ) )
    {
      if ( entry.at( "id" ).get<std::size_t>() != gates.size() )
      {
        throw parse_error( 0u, "gate ids must be dense and in order" );
      }
      gate g;
      g.kind = parse_kind( entry.at( "kind" ).get<std::string>() );
      if ( g.kind == gate_kind::input )
      {
        g.var = entry.at( "var" ).get<unsigned>();
      }
      for ( auto const& f : entry.at( "operands" ) )
      {
        g.fanins.push_back( gate_id{ f.get<std::uint32_t>() } );
      }
      gates.push_back( std::move( g ) );
    }
    std::vector<circuit_output> outputs;
    for ( auto const& entry : doc.at( "outputs" ) )
    {
      outputs.push_back( circuit_output{ gate_id{ entry.at( "id" ).get<std::uint32_t>() }, entry.at( "label" ).get<std::string>() } );
    }
    return circuit( n, std::move( gates ), std::move( outputs ) );
  }
  catch ( json::exception const& e )
  {
    throw parse_error( 0u, std::string( "invalid circuit JSON: " ) + e.what() );
  }
}

std::string report_to_json( verification_report const& report )
{
  json doc;
  doc["mode"] = std::string( to_string( report.mode ) );
  if ( report.mode == check_mode::sampled )
  {
    doc["samples"] = report.samples;
    doc["seed"] = report.seed;
  }
  doc["arity"] = report.arity;
  doc["inputs_checked"] = report.inputs_checked;
  doc["outputs_checked"] = report.outputs_checked;
  doc["mismatch_count"] = report.mismatch_total;
  auto& list = doc["mismatches"] = json::array();
  for ( auto const& mm : report.mismatches )
  {
    list.push_back( { { "input", bits_string( mm.input ) },
                      { "output", mm.output + 1u },
                      { "expected", mm.expected ? 1 : 0 },
                      { "got", mm.got ? 1 : 0 } } );
  }
  doc["and_count_observed"] = report.and_count_observed;
  doc["and_count_expected"] = report.and_count_expected ? json( *report.and_count_expected ) : json( nullptr );
  doc["passed"] = report.passed;
  return doc.dump( 2 ) + "\n";
}

std::string lemma_suite_to_json( unsigned n_max, std::vector<lemma_check> const& checks )
{
  json doc;
  doc["n_max"] = n_max;
  bool all = true;
  auto& list = doc["checks"] = json::array();
  for ( auto const& c : checks )
  {
    all = all && c.passed;
    json entry = { { "lemma", c.lemma }, { "n", c.n }, { "i", c.i }, { "passed", c.passed } };
    if ( !c.detail.empty() )
    {
      entry["detail"] = c.detail;
    }
    list.push_back( std::move( entry ) );
  }
  doc["passed"] = all;
  return doc.dump( 2 ) + "\n";
}

} // namespace mcxag
