// argwb: command-line front end for the argumentation workbench.

#include <CLI11.hpp>

#include <cstdlib>
#include <csignal>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "argwb/error.hpp"
#include "argwb/formats.hpp"
#include "argwb/json_io.hpp"
#include "argwb/service.hpp"
#include "argwb/task.hpp"

using namespace argwb;

namespace {

// ARGWB_LOG=error|warn|info|debug; messages go to stderr only.
enum class LogLevel { Error = 0, Warn, Info, Debug };

LogLevel log_level() {
  const char* env = std::getenv("ARGWB_LOG");
  if (!env) return LogLevel::Warn;
  const std::string v = env;
  if (v == "error") return LogLevel::Error;
  if (v == "info") return LogLevel::Info;
  if (v == "debug") return LogLevel::Debug;
  return LogLevel::Warn;
}

void log(LogLevel level, const std::string& msg) {
  static const LogLevel threshold = log_level();
  static const char* names[] = {"error", "warn", "info", "debug"};
  if (level <= threshold) std::cerr << "argwb: " << names[static_cast<int>(level)] << ": " << msg << '\n';
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path);
  return {std::istreambuf_iterator<char>(in), {}};
}

Format input_format(const std::string& path, const std::string& flag) {
  if (!flag.empty()) return *parse_format(flag);
  if (auto f = format_from_path(path)) return *f;
  throw Error(ErrorCode::IncompatibleTask, "cannot infer the format of " + path + "; pass --format");
}

Document load(const std::string& path, const std::string& format) {
  const Format f = input_format(path, format);
  log(LogLevel::Info, "reading " + path);
  return read_document(read_input(path), f);
}

std::optional<AudienceOrder> audience_flag(const std::string& text) {
  if (text.empty()) return std::nullopt;
  std::vector<std::string> values;
  std::stringstream in(text);
  for (std::string v; std::getline(in, v, ',');) values.push_back(v);
  return AudienceOrder(std::move(values));
}

std::optional<ArgId> argument_flag(const std::string& text) {
  if (text.empty()) return std::nullopt;
  return text;
}

int report(const Error& e) {
  std::cerr << "argwb: " << to_string(e.code()) << ": " << e.what() << '\n';
  return e.code() == ErrorCode::OracleMismatch ? 3 : 2;
}

HttpServer* running_server = nullptr;

void on_signal(int) {
  if (running_server) running_server->stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Argumentation workbench"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"tgf", "apx", "json"};
  const std::vector<std::string> semantics{"GR", "CO", "PR", "ST"};

  std::string input, format, task = "EE", sem = "GR", argument, audience, verbosity = "detailed";
  std::string edits_path, to_format, output, host = "127.0.0.1", journal;
  bool oracle = false, json = false;
  int port = 8080;

  auto* solve = app.add_subcommand("solve", "Solve a reasoning task");
  solve->add_option("input", input, "Input file, - for stdin")->required();
  solve->add_option("--format", format)->check(CLI::IsMember(formats));
  solve->add_option("--task", task, "SE, EE, DC, DS or MODELS")->check(CLI::IsMember({"SE", "EE", "DC", "DS", "MODELS"}));
  solve->add_option("--semantics", sem)->check(CLI::IsMember(semantics));
  solve->add_option("--argument", argument, "Query argument for DC/DS");
  solve->add_option("--audience", audience, "Comma-separated value order, most preferred first");
  solve->add_flag("--oracle", oracle, "Cross-check against the brute-force oracle");
  solve->add_flag("--json", json, "Print the structured result");

  auto* explain = app.add_subcommand("explain", "Explain statuses, with a dispute tree for --argument");
  explain->add_option("input", input)->required();
  explain->add_option("--format", format)->check(CLI::IsMember(formats));
  explain->add_option("--semantics", sem)->check(CLI::IsMember(semantics));
  explain->add_option("--argument", argument);
  explain->add_option("--audience", audience);
  explain->add_option("--verbosity", verbosity)->check(CLI::IsMember({"summary", "detailed", "full"}));
  explain->add_flag("--json", json);

  auto* whatif = app.add_subcommand("whatif", "Preview the status delta of hypothetical edits");
  whatif->add_option("input", input)->required();
  whatif->add_option("--format", format)->check(CLI::IsMember(formats));
  whatif->add_option("--edits", edits_path, "JSON array of edits")->required();
  whatif->add_option("--semantics", sem)->check(CLI::IsMember(semantics));
  whatif->add_option("--audience", audience);

  auto* serve = app.add_subcommand("serve", "Run the session HTTP service");
  serve->add_option("--host", host);
  serve->add_option("--port", port);
  serve->add_option("--journal", journal, "Directory for per-session append-only journals");

  auto* convert = app.add_subcommand("convert", "Convert between formats");
  convert->add_option("input", input)->required();
  convert->add_option("--format", format)->check(CLI::IsMember(formats));
  convert->add_option("--to", to_format)->required()->check(CLI::IsMember(formats));
  convert->add_option("-o,--output", output);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*solve) {
      const Document doc = load(input, format);
      RunOptions options;
      options.audience = audience_flag(audience);
      options.oracle = oracle;
      const ProblemTask t = make_task(*parse_task_kind(task), *parse_semantics(sem), argument_flag(argument));
      const TaskOutput out = run_task(doc, t, options);
      if (oracle) log(LogLevel::Info, "oracle agrees");
      std::cout << (json ? out.result.dump(2) + "\n" : out.text);
    } else if (*explain) {
      const Document doc = load(input, format);
      const auto s = *parse_semantics(sem);
      if (json)
        std::cout << explain_payload(doc, s, argument_flag(argument), audience_flag(audience)).dump(2) << '\n';
      else
        std::cout << explain_text(doc, s, argument_flag(argument), audience_flag(audience), *parse_verbosity(verbosity));
    } else if (*whatif) {
      const Document doc = load(input, format);
      Json edits;
      try {
        edits = Json::parse(read_input(edits_path));
      } catch (const Json::parse_error&) {
        throw Error(ErrorCode::SchemaError, "$: malformed JSON in " + edits_path);
      }
      const EvaluationConfig config{*parse_semantics(sem), audience_flag(audience)};
      std::cout << to_json(what_if(doc, edits_from_json(edits), config)).dump(2) << '\n';
    } else if (*serve) {
      Service service(journal.empty() ? std::nullopt : std::optional<std::filesystem::path>(journal));
      HttpServer server(service);
      const int bound = server.bind(host, port);
      running_server = &server;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      log(LogLevel::Warn, "listening on " + host + ":" + std::to_string(bound));
      server.run();
    } else if (*convert) {
      const Document doc = load(input, format);
      const std::string text = write_document(doc, *parse_format(to_format));
      if (output.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(output, std::ios::binary);
        out << text;
        if (!out) throw Error(ErrorCode::IoError, "cannot write " + output);
      }
    }
  } catch (const Error& e) {
    return report(e);
  } catch (const Json::exception& e) {
    return report(Error(ErrorCode::SchemaError, e.what()));
  }
  return 0;
}
