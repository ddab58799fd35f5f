#include "k3fib/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "k3fib/json_io.hpp"
#include "k3fib/ratfunc.hpp"
#include "k3fib/weierstrass.hpp"

#ifndef _WIN32
#include <unistd.h>
#endif

namespace k3fib {

namespace {

bool color_enabled() {
  const char* env = std::getenv("K3FIB_COLOR");
  std::string mode = env ? env : "auto";
  if (mode == "never") return false;
#ifndef _WIN32
  return isatty(fileno(stderr)) != 0;
#else
  return false;
#endif
}

void emit_error(std::ostream& err, const std::string& code,
                const std::string& message) {
  json obj = {{"code", code}, {"message", message}};
  bool color = color_enabled();
  if (color) err << "\x1b[31m";
  err << obj.dump() << (color ? "\x1b[0m\n" : "\n");
}

BranchSelection parse_branch(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    fail(errc::syntax_error, "--branch expects two comma-separated slots");
  auto slot = [](std::string s) -> BranchSlot {
    auto space = [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); };
    s.erase(std::remove_if(s.begin(), s.end(), space), s.end());
    if (s == "smooth" || s == "I0") return std::nullopt;
    return KodairaType::parse(s);
  };
  return BranchSelection(slot(text.substr(0, comma)), slot(text.substr(comma + 1)));
}

std::string csv_quote(const std::string& s) {
  if (s.find(',') == std::string::npos && s.find('"') == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void cmd_fibers(const std::string& type_str, const std::string& config_str,
                int picard, std::ostream& out) {
  if (!type_str.empty()) {
    KodairaType f = KodairaType::parse(type_str);
    json obj = {{"type", f.str()},
                {"euler", f.euler_number()},
                {"components", f.component_count()},
                {"root_rank", f.root_rank()},
                {"reduced", f.is_reduced()}};
    obj["ramified_transform"] =
        f.is_reduced() ? json(ramified_transform(f).str()) : json(nullptr);
    out << obj.dump(2) << "\n";
    return;
  }
  FiberConfiguration c = FiberConfiguration::parse(config_str);
  json obj = {{"config", config_to_json(c)},
              {"euler", c.euler_characteristic()},
              {"trivial_lattice_rank", c.trivial_lattice_rank()},
              {"total_fibers", c.total_fibers()}};
  if (picard > 0) {
    obj["picard"] = picard;
    obj["mw_rank"] = mw_rank(picard, c);
  }
  out << obj.dump(2) << "\n";
}

void cmd_basechange(const std::string& config_str, const std::string& branch_str,
                    std::ostream& out) {
  FiberConfiguration c = FiberConfiguration::parse(config_str);
  FiberConfiguration image = apply_quadratic_base_change(c, parse_branch(branch_str));
  json obj = {{"fibers", config_to_json(image)}};
  out << obj.dump() << "\n";
}

void cmd_extremal(bool csv, std::ostream& out) {
  std::vector<ExtremalRow> rows = enumerate_extremal_k3();
  if (csv) {
    out << "#,RES fibers,branch fibers,K3 fibers,T\n";
    for (const ExtremalRow& row : rows) {
      FiberConfiguration branch;
      if (row.branch.first) branch.add(*row.branch.first);
      if (row.branch.second) branch.add(*row.branch.second);
      out << row.index << ',' << csv_quote(row.res_config.str()) << ','
          << csv_quote(branch.str()) << ',' << csv_quote(row.k3_config.str())
          << ',' << csv_quote("(" + std::to_string(row.t_x[0]) + "," +
                              std::to_string(row.t_x[1]) + "," +
                              std::to_string(row.t_x[2]) + ")")
          << "\n";
    }
    return;
  }
  json arr = json::array();
  for (const ExtremalRow& row : rows) arr.push_back(row_to_json(row));
  out << arr.dump(2) << "\n";
}

void cmd_dedup(std::ostream& out) {
  DedupReport report = deduplicate_by_transcendental(enumerate_extremal_k3());
  out << dedup_to_json(report).dump(2) << "\n";
}

void cmd_conics(const std::string& input, std::ostream& out) {
  json parsed;
  if (input == "-") {
    parsed = json::parse(std::cin, nullptr, false);
  } else {
    std::ifstream file(input);
    if (!file) fail(errc::syntax_error, "cannot open '" + input + "'");
    parsed = json::parse(file, nullptr, false);
  }
  if (parsed.is_discarded() || !parsed.is_array())
    fail(errc::syntax_error, "expected a JSON array of divisor classes");
  json results = json::array();
  for (const auto& entry : parsed) {
    DivisorClass d = divisor_from_json(entry);
    auto multiple = fiber_class_multiple(d);
    results.push_back(
        {{"class", divisor_to_json(d)},
         {"self_pairing", pairing(d, d)},
         {"anticanonical_pairing", pairing(d, anticanonical(d.rank()))},
         {"is_conic_class", is_conic_class(d)},
         {"is_section", is_section(d)},
         {"is_fiber_class", is_fiber_class(d)},
         {"fiber_multiple", multiple ? json(*multiple) : json(nullptr)}});
  }
  out << results.dump(2) << "\n";
}

void cmd_classify(const std::string& config_str, std::ostream& out) {
  FiberConfiguration c = FiberConfiguration::parse(config_str);
  Type2Report report = type2_candidate(c);
  json unpaired = json::array();
  for (KodairaType f : report.unpaired) unpaired.push_back(f.str());
  json pairs = json::object();
  for (const auto& [f, n] : report.pairs) pairs[f.str()] = n;
  json obj = {{"type2_candidate", report.is_candidate},
              {"unpaired", unpaired},
              {"pairs", pairs},
              {"type1_symplectic_admissible", type1_symplectic_admissible(c)},
              {"type1_nonsymplectic_admissible", type1_nonsymplectic_admissible(c)}};
  out << obj.dump(2) << "\n";
}

void cmd_extract(const std::string& f3_str, const std::string& g3_str,
                 const std::string& pencil_str, const std::string& point_str,
                 std::ostream& out) {
  DoubleCoverModel cover(MultiPoly::parse(f3_str), MultiPoly::parse(g3_str));
  PencilModel pencil(MultiPoly::parse(pencil_str));
  ExtractionResult extraction = extract_genus_one_fibration(cover, pencil);

  json obj = {{"a", extraction.a.str()},
              {"b", extraction.quartic.b.str()},
              {"c", extraction.quartic.c.str()}};
  if (point_str.empty()) {
    obj["weierstrass"] = nullptr;
    obj["fibers"] = nullptr;
  } else {
    auto comma = point_str.find(',');
    if (comma == std::string::npos)
      fail(errc::syntax_error, "--point expects u0,w0");
    auto component = [](const std::string& text) {
      MultiPoly p = MultiPoly::parse(text);
      for (Var v : {Var::x0, Var::x1, Var::x2})
        if (p.degree(v) > 0)
          fail(errc::syntax_error, "point coordinates must depend on t only");
      return RatFunc(p);
    };
    QuarticPoint pt{component(point_str.substr(0, comma)),
                    component(point_str.substr(comma + 1))};
    WeierstrassModel model = quartic_to_weierstrass(extraction.quartic, pt);
    obj["weierstrass"] = {{"A", model.A().str()}, {"B", model.B().str()}};
    obj["fibers"] = config_to_json(fiber_configuration_of(model));
  }
  out << obj.dump(2) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"exact arithmetic for elliptic fibrations on rational elliptic "
               "surfaces and their K3 double covers"};
  app.name("k3fib");
  app.require_subcommand(1);

  std::string type_str, config_str, branch_str, input_str = "-";
  std::string f3_str, g3_str, pencil_str, point_str;
  int picard = 0;
  bool csv = false;

  CLI::App* fibers = app.add_subcommand("fibers", "fiber type and configuration queries");
  fibers->add_option("--type", type_str, "a fiber symbol, e.g. I4*");
  fibers->add_option("--config", config_str, "a configuration, e.g. 2III*+2I2+2I1");
  fibers->add_option("--picard", picard, "Picard number for the Mordell-Weil rank");

  CLI::App* basechange =
      app.add_subcommand("basechange", "apply a quadratic base change");
  basechange->add_option("--config", config_str, "source configuration")->required();
  basechange->add_option("--branch", branch_str, "two slots, e.g. I1,I1 or smooth,smooth")
      ->required();

  CLI::App* extremal = app.add_subcommand(
      "extremal", "the 25 extremal K3 fibrations from extremal RES");
  extremal->add_flag("--csv", csv, "table layout instead of JSON");

  app.add_subcommand("dedup", "group the 25 rows into K3 surfaces");

  CLI::App* conics =
      app.add_subcommand("conics", "conic/section predicates on divisor classes");
  conics->add_option("--input", input_str, "JSON file of classes, '-' for stdin");

  CLI::App* classify =
      app.add_subcommand("classify-type", "type-1/2 admissibility of a configuration");
  classify->add_option("--config", config_str, "configuration to test")->required();

  CLI::App* extract = app.add_subcommand(
      "extract-weierstrass", "genus 1 fibration from a double-plane model");
  extract->add_option("--f3", f3_str, "first branch cubic")->required();
  extract->add_option("--g3", g3_str, "second branch cubic")->required();
  extract->add_option("--pencil", pencil_str, "pencil h(x0,x1,x2,t), linear in t")
      ->required();
  extract->add_option("--point", point_str, "section u0,w0 of the quartic");

  std::ostringstream buffer;
  int status = 0;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (fibers->parsed()) {
      if (type_str.empty() == config_str.empty())
        throw CLI::ValidationError("fibers", "give exactly one of --type / --config");
      cmd_fibers(type_str, config_str, picard, buffer);
    } else if (basechange->parsed()) {
      cmd_basechange(config_str, branch_str, buffer);
    } else if (extremal->parsed()) {
      cmd_extremal(csv, buffer);
    } else if (app.get_subcommand("dedup")->parsed()) {
      cmd_dedup(buffer);
    } else if (conics->parsed()) {
      cmd_conics(input_str, buffer);
    } else if (classify->parsed()) {
      cmd_classify(config_str, buffer);
    } else if (extract->parsed()) {
      cmd_extract(f3_str, g3_str, pencil_str, point_str, buffer);
    }
  } catch (const CLI::CallForHelp& e) {
    out << app.help() << std::flush;
    return 0;
  } catch (const CLI::ParseError& e) {
    emit_error(err, "Usage", e.what());
    return 2;
  } catch (const Error& e) {
    emit_error(err, e.code_name(), e.what());
    return 1;
  } catch (const std::exception& e) {
    emit_error(err, "Internal", e.what());
    return 1;
  }
  out << buffer.str() << std::flush;
  return status;
}

}  // namespace k3fib
