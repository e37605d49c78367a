#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "altpow/altpow.h"
#include "json.hpp"

using nlohmann::json;

namespace {

// Inline JSON, @path, or a bare word passed through as a string.
json read_json_arg(const std::string& text) {
  if (!text.empty() && text[0] == '@') {
    std::ifstream in(text.substr(1));
    if (!in) throw CLI::ValidationError("cannot open " + text.substr(1));
    return json::parse(in);
  }
  if (!text.empty() && (text[0] == '{' || text[0] == '[')) return json::parse(text);
  return text;
}

std::string cell(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_table(std::ostream& out, const json& rows) {
  std::map<std::string, bool> columns;
  for (const auto& r : rows) {
    for (const auto& [k, v] : r.items()) columns[k] = true;
  }
  bool first = true;
  for (const auto& [k, _] : columns) {
    out << (first ? "" : "\t") << k;
    first = false;
  }
  out << "\n";
  for (const auto& r : rows) {
    first = true;
    for (const auto& [k, _] : columns) {
      out << (first ? "" : "\t") << (r.contains(k) ? cell(r.at(k)) : "");
      first = false;
    }
    out << "\n";
  }
}

void print_tsv(std::ostream& out, const json& payload) {
  const std::string command = payload.at("command");
  const json& result = payload.at("result");
  json rows = json::array();
  if (command == "loops" && result.contains("component_list")) {
    rows = result.at("component_list");
  } else if (command == "wreath-classes") {
    rows = result.at("classes");
  } else if (command == "yoshida") {
    rows = result.at("terms");
  } else if (command == "genfunc") {
    for (std::size_t m = 0; m < result.at("sym").size(); ++m) {
      rows.push_back({{"m", std::to_string(m)},
                      {"sym", result.at("sym").at(m)},
                      {"alt", result.at("alt").at(m)},
                      {"product", result.at("product").at(m)}});
    }
  } else {
    json row = json::object();
    for (const auto& [k, v] : result.items()) {
      if (!v.is_structured()) row[k] = v;
    }
    rows.push_back(row);
  }
  print_table(out, rows);
}

struct Global {
  std::string format = "json";
  unsigned threads = 1;
  std::uint64_t order_bound = 0;
  bool no_cache = false;
  std::string cache_dir;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact twisted alternating powers and iterated characters of permutation representations"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "tsv"}));
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--order-bound", g.order_bound, "Largest group order the engine may enumerate")
      ->check(CLI::PositiveNumber);
  app.add_flag("--no-cache", g.no_cache, "Bypass the result cache");
  app.add_option("--cache-dir", g.cache_dir, "Cache directory (overrides ALTPOW_CACHE)");

  json params = json::object();
  std::string command;
  // Every value is forwarded as a string; the engine validates and normalizes.
  auto value = [&](CLI::App* sub, const std::string& flag, const std::string& key, bool required = false) {
    auto* opt = sub->add_option_function<std::string>(flag, [&params, key](const std::string& v) { params[key] = v; });
    if (required) opt->required();
    return opt;
  };
  auto flag = [&](CLI::App* sub, const std::string& name, const std::string& key) {
    sub->add_flag_function(name, [&params, key](std::int64_t) { params[key] = true; });
  };
  auto structured = [&](CLI::App* sub, const std::string& flag, const std::string& key, bool required = false) {
    auto* opt = sub->add_option_function<std::string>(flag,
                                                      [&params, key](const std::string& v) { params[key] = read_json_arg(v); });
    if (required) opt->required();
    return opt;
  };

  for (const char* name : {"dim", "powerop"}) {
    auto* sub = app.add_subcommand(name, std::string(name) == "dim" ? "Twisted alternating-power dimension"
                                                                    : "Twisted power operation");
    value(sub, "--m", "m", true);
    value(sub, "--d", "d", true);
    value(sub, "--p", "p");
    value(sub, "--height", "height");
    value(sub, "--group", "group");
    structured(sub, "--twist", "twist")->description("trivial, sgn1, inline cocycle JSON or @file");
    if (std::string(name) == "powerop") flag(sub, "--fully-p-typical", "fully_p_typical");
  }
  {
    auto* sub = app.add_subcommand("loops", "p-typical free loop components of B S_m");
    value(sub, "--m", "m", true);
    value(sub, "--p", "p");
    value(sub, "--t", "t");
    flag(sub, "--count-only", "count_only");
  }
  {
    auto* sub = app.add_subcommand("wreath-classes", "Conjugacy classes of G wr S_m");
    value(sub, "--g", "g", true);
    value(sub, "--m", "m", true);
    flag(sub, "--verify", "verify");
  }
  {
    auto* sub = app.add_subcommand("h1", "Height-1 alternating-power dimension");
    value(sub, "--m", "m", true);
    value(sub, "--d", "d", true);
    flag(sub, "--super", "super");
    value(sub, "--closed-form", "closed_form");
  }
  {
    auto* sub = app.add_subcommand("yoshida", "Yoshida decomposition terms");
    value(sub, "--group", "group", true);
    value(sub, "--p", "p");
    flag(sub, "--verify", "verify");
    value(sub, "--d", "d");
    value(sub, "--t", "t");
    flag(sub, "--mixed", "mixed");
  }
  {
    auto* sub = app.add_subcommand("genfunc", "Generating-function identity check");
    value(sub, "--height", "height", true);
    value(sub, "--d", "d", true);
    value(sub, "--max-m", "max_m", true);
    value(sub, "--alt-source", "alt_source");
    sub->add_option_function<std::string>("--alt-values", [&params](const std::string& v) {
      json parsed = read_json_arg(v);
      if (parsed.is_string()) {
        json list = json::array();
        std::stringstream ss(parsed.get<std::string>());
        for (std::string item; std::getline(ss, item, ',');) list.push_back(item);
        parsed = list;
      }
      params["alt_values"] = parsed;
    })->description("comma-separated values, JSON array or @file");
  }
  {
    auto* sub = app.add_subcommand("transgress", "Iterated transgression of a cocycle");
    structured(sub, "--cocycle", "cocycle", true)->description("inline cocycle JSON or @file");
    sub->add_option_function<std::vector<std::string>>("--tuple", [&params](const std::vector<std::string>& v) {
      params["tuple"] = v;
    })->required()->description("group elements in cycle notation, in order");
  }
  std::string raw_request;
  {
    auto* sub = app.add_subcommand("run", "Run a raw JSON request");
    sub->add_option("request", raw_request, "inline JSON or @file")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  json request;
  command = app.get_subcommands().front()->get_name();
  if (command == "run") {
    try {
      request = read_json_arg(raw_request);
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return 2;
    }
  } else {
    request = {{"command", command}, {"params", params}};
  }

  altpow_context* ctx = altpow_context_create();
  if (!ctx) {
    std::cerr << "error: cannot create engine context\n";
    return 1;
  }
  if (g.order_bound) altpow_context_set_order_bound(ctx, g.order_bound);
  altpow_context_set_threads(ctx, g.threads);
  if (!g.no_cache) {
    altpow_context_set_cache_dir(ctx, g.cache_dir.empty() ? altpow_default_cache_dir() : g.cache_dir.c_str());
  }

  altpow_result* result = nullptr;
  const altpow_status status = altpow_run(ctx, request.dump().c_str(), &result);
  if (status != ALTPOW_OK) {
    std::cerr << "error [" << altpow_status_string(status) << "]: " << altpow_context_last_error(ctx) << "\n";
    altpow_context_destroy(ctx);
    return altpow_status_exit_code(status);
  }
  for (std::size_t i = 0; i < altpow_result_warning_count(result); ++i) {
    std::cerr << "warning: " << altpow_result_warning(result, i) << "\n";
  }
  const std::string text = altpow_result_json(result);
  if (g.format == "tsv") {
    print_tsv(std::cout, json::parse(text));
  } else {
    std::cout << text;
  }
  altpow_result_destroy(result);
  altpow_context_destroy(ctx);
  return 0;
}
