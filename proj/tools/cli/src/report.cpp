#include "padicig_cli/report.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace padicig::cli {

nlohmann::json json_integer(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

namespace {

Integer integer_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  if (j.is_number_unsigned()) return Integer(j.get<unsigned long>());
  return Integer(j.get<long>());
}

}  // namespace

nlohmann::json json_rational(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return {{"num", json_integer(c.get_num())}, {"den", json_integer(c.get_den())}};
}

Rational rational_from_json(const nlohmann::json& j) {
  Rational q(integer_from_json(j.at("num")), integer_from_json(j.at("den")));
  q.canonicalize();
  return q;
}

std::string decimal(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string to_csv(const Table& t) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i > 0) out += ',';
      const bool quote = cells[i].find_first_of(",\"\n") != std::string::npos;
      if (!quote) {
        out += cells[i];
        continue;
      }
      out += '"';
      for (char ch : cells[i]) {
        if (ch == '"') out += '"';
        out += ch;
      }
      out += '"';
    }
    out += '\n';
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  return out;
}

std::string render_json(const Report& r) {
  nlohmann::json j;
  j["config"] = to_json(r.config);
  j["results"] = r.results;
  j["pass"] = r.pass;
  return j.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  Report r;
  r.config = config_from_json(j.at("config"));
  r.results = j.at("results");
  r.pass = j.at("pass").get<bool>();
  return r;
}

std::string report_stem(const ExperimentConfig& c) {
  std::string stem = c.subcommand;
  for (const char* key : {"experiment", "check"}) {
    if (auto it = c.options.find(key); it != c.options.end()) stem += "-" + it->second;
  }
  return stem;
}

std::vector<std::string> emit_report(const Report& r) {
  namespace fs = std::filesystem;
  const fs::path dir = resolve_output_dir(r.config);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create output directory " + dir.string() + ": " + ec.message());
  std::vector<std::string> written;
  auto write = [&](const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("cannot write " + path.string());
    written.push_back(path.string());
  };
  const std::string stem = report_stem(r.config);
  write(dir / (stem + ".json"), render_json(r));
  if (r.table) write(dir / (stem + ".csv"), to_csv(*r.table));
  return written;
}

}  // namespace padicig::cli
