// acvf-lab: batch JSON front end to the acvf library.
//
//   acvf-lab GROUP COMMAND [--in FILE] [--seed N] [--budget N]
//            [--backend ratfunc|puiseux] [--pretty] [--manifest OUT]
//   acvf-lab replay MANIFEST [--in FILE]
//
// Exit status: 0 success, 2 domain error, 1 malformed input or usage.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "commands.hpp"

namespace {

using acvf::Json;
using acvf::cli::Context;

struct Outcome {
  int exit_code = 0;
  std::string out;
};

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + buf;
}

bool read_input(const std::string& path, std::string& out) {
  if (path.empty() || path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return true;
  }
  std::ifstream f(path, std::ios::binary);
  if (!f) return false;
  out.assign(std::istreambuf_iterator<char>(f), {});
  return true;
}

Json error_json(std::string_view code, const std::string& message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

bool is_field_elem(const Json& j) {
  return j.is_object() && ((j.contains("num") && j.contains("den")) || (j.contains("terms") && j.contains("prec")));
}

// Field elements in standard notation, one per line, after the JSON.
void render(const Json& j, const std::string& path, std::ostringstream& os) {
  if (is_field_elem(j)) {
    try {
      os << "# " << (path.empty() ? "." : path) << " = " << acvf::Decoder().elem(j).pretty() << "\n";
    } catch (const acvf::Error&) {
    }
    return;
  }
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) render(v, path + "." + k, os);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) render(j[i], path + "[" + std::to_string(i) + "]", os);
  }
}

std::string format(const Json& j, bool pretty) {
  if (!pretty) return acvf::dump(j) + "\n";
  std::ostringstream os;
  os << j.dump(2) << "\n";
  render(j, "", os);
  return os.str();
}

Outcome run(const std::string& command, const std::string& input, const Context& ctx, bool pretty) {
  const auto& table = acvf::cli::commands();
  auto it = table.find(command);
  if (it == table.end()) return {1, format(error_json("MALFORMED", "unknown command '" + command + "'"), pretty)};
  try {
    const Json in = Json::parse(input);
    return {0, format(it->second(in, ctx), pretty)};
  } catch (const acvf::Error& e) {
    std::cerr << "acvf-lab: " << acvf::error_name(e.code()) << ": " << e.what() << "\n";
    return {acvf::is_input_error(e.code()) ? 1 : 2, format(error_json(acvf::error_name(e.code()), e.what()), pretty)};
  } catch (const Json::exception& e) {
    std::cerr << "acvf-lab: malformed JSON: " << e.what() << "\n";
    return {1, format(error_json("MALFORMED", e.what()), pretty)};
  } catch (const std::exception& e) {
    std::cerr << "acvf-lab: internal error: " << e.what() << "\n";
    return {2, format(error_json("INTERNAL", e.what()), pretty)};
  }
}

Json backend_json(const Context& ctx) {
  if (!ctx.backend) return nullptr;
  return *ctx.backend == acvf::Backend::kRatFunc ? "ratfunc" : "puiseux";
}

Json manifest(const std::string& command, const std::string& in_path, const std::string& input, const Context& ctx,
              bool pretty, const Outcome& o) {
  return {{"command", command},
          {"input", in_path.empty() ? "-" : in_path},
          {"input_digest", fnv1a64(input)},
          {"seed", ctx.seed},
          {"budget", ctx.budget},
          {"backend", backend_json(ctx)},
          {"pretty", pretty},
          {"version", acvf::library_version()},
          {"schema", acvf::kSchemaVersion},
          {"outputs", {{"exit_code", o.exit_code}, {"stdout_digest", fnv1a64(o.out)}}}};
}

int replay(const std::string& manifest_path, const std::string& in_override) {
  std::string text;
  if (!read_input(manifest_path, text)) {
    std::cerr << "acvf-lab: cannot read " << manifest_path << "\n";
    return 1;
  }
  try {
    const Json m = Json::parse(text);
    Context ctx;
    ctx.seed = acvf::field(m, "seed").get<std::uint64_t>();
    ctx.budget = acvf::field(m, "budget").get<std::size_t>();
    const Json& b = acvf::field(m, "backend");
    if (!b.is_null()) ctx.backend = acvf::parse_backend(b.get<std::string>());
    const bool pretty = m.value("pretty", false);
    const std::string in_path = in_override.empty() ? acvf::field(m, "input").get<std::string>() : in_override;
    std::string input;
    if (!read_input(in_path, input)) {
      std::cerr << "acvf-lab: cannot read " << in_path << "\n";
      return 1;
    }
    if (fnv1a64(input) != acvf::field(m, "input_digest").get<std::string>()) {
      std::cout << acvf::dump(error_json("INPUT_DIGEST_MISMATCH", "input differs from the manifest")) << "\n";
      return 1;
    }
    const Outcome o = run(acvf::field(m, "command").get<std::string>(), input, ctx, pretty);
    const Json& want = acvf::field(m, "outputs");
    if (fnv1a64(o.out) != acvf::field(want, "stdout_digest").get<std::string>() ||
        o.exit_code != acvf::field(want, "exit_code").get<int>()) {
      std::cout << acvf::dump(error_json("REPLAY_MISMATCH", "output differs from the manifest")) << "\n";
      return 2;
    }
    std::cout << o.out;
    return o.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "acvf-lab: bad manifest: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with lattices, semi-lattices, Γ-types and stably dominated types"};
  app.require_subcommand(0, 1);
  bool version = false;
  app.add_flag("--version", version, "Print library and schema versions");

  std::string in_path, manifest_out, backend;
  Context ctx;
  bool pretty = false;
  std::string selected;

  std::map<std::string, std::vector<std::string>> groups;
  for (const auto& [name, handler] : acvf::cli::commands()) {
    const auto space = name.find(' ');
    groups[name.substr(0, space)].push_back(name.substr(space + 1));
  }
  for (const auto& [group, cmds] : groups) {
    CLI::App* g = app.add_subcommand(group, group + " commands");
    g->require_subcommand(1);
    for (const auto& cmd : cmds) {
      CLI::App* c = g->add_subcommand(cmd);
      c->add_option("--in", in_path, "Input JSON file (default: stdin)");
      c->add_option("--seed", ctx.seed, "Seed for randomized search");
      c->add_option("--budget", ctx.budget, "Sample budget for randomized search");
      c->add_option("--backend", backend, "Expected field backend")->check(CLI::IsMember({"ratfunc", "puiseux"}));
      c->add_flag("--pretty", pretty, "Indent JSON and print field elements in standard notation");
      c->add_option("--manifest", manifest_out, "Write a run manifest to this file");
      c->callback([&selected, name = group + " " + cmd] { selected = name; });
    }
  }

  std::string replay_manifest, replay_in;
  CLI::App* rp = app.add_subcommand("replay", "Re-run a manifest and check the output is byte-identical");
  rp->add_option("manifest", replay_manifest, "Manifest file")->required();
  rp->add_option("--in", replay_in, "Input file (default: the one recorded)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (version) {
    std::cout << acvf::dump(Json{{"version", acvf::library_version()}, {"schema", acvf::kSchemaVersion}}) << "\n";
    return 0;
  }
  if (rp->parsed()) return replay(replay_manifest, replay_in);
  if (selected.empty()) {
    std::cerr << app.help();
    return 1;
  }
  if (!backend.empty()) ctx.backend = acvf::parse_backend(backend);

  std::string input;
  if (!read_input(in_path, input)) {
    std::cerr << "acvf-lab: cannot read " << in_path << "\n";
    return 1;
  }
  const Outcome o = run(selected, input, ctx, pretty);
  std::cout << o.out;
  if (!manifest_out.empty()) {
    std::ofstream f(manifest_out, std::ios::binary);
    f << manifest(selected, in_path, input, ctx, pretty, o).dump(2) << "\n";
    if (!f) {
      std::cerr << "acvf-lab: cannot write " << manifest_out << "\n";
      return 1;
    }
  }
  return o.exit_code;
}
