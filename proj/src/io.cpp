#include "stimint/io.hpp"

#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace stimint {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::map<std::string, std::string> read_key_values(std::istream& in) {
  std::map<std::string, std::string> kv;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    std::size_t eq = t.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    std::string key = trim(t.substr(0, eq));
    std::string value = trim(t.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": empty key or value");
    }
    if (!kv.emplace(key, value).second) {
      throw std::invalid_argument("config: duplicate key " + key);
    }
  }
  return kv;
}

double to_double(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  double d;
  try {
    d = std::stod(value, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("config: key " + key + " has non-numeric value '" + value + "'");
  }
  if (used != value.size()) {
    throw std::invalid_argument("config: key " + key + " has trailing junk in '" + value + "'");
  }
  return d;
}

long long to_int(const std::string& key, const std::string& value) {
  double d = to_double(key, value);
  long long i = (long long)(d);
  if (double(i) != d) throw std::invalid_argument("config: key " + key + " must be an integer");
  return i;
}

std::vector<double> to_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(to_double(key, trim(item)));
  }
  return out;
}

void apply_shared(ScanSettings& s, std::map<std::string, std::string>& kv) {
  int delay_points = 21;
  double delay_halfspan = -1.0;  // in units of tc
  auto take = [&](const char* key) -> std::string {
    auto it = kv.find(key);
    if (it == kv.end()) return "";
    std::string v = it->second;
    kv.erase(it);
    return v;
  };
  if (auto v = take("alpha"); !v.empty()) s.alpha = parse_complex(v);
  if (auto v = take("g"); !v.empty()) s.g = parse_complex(v);
  if (auto v = take("t0"); !v.empty()) s.overlap.t0 = to_double("t0", v);
  if (auto v = take("tc"); !v.empty()) s.overlap.tc = to_double("tc", v);
  if (auto v = take("beta_max"); !v.empty()) s.beta_max = to_double("beta_max", v);
  if (auto v = take("delays"); !v.empty()) s.delays = to_list("delays", v);
  if (auto v = take("delay_points"); !v.empty()) delay_points = int(to_int("delay_points", v));
  if (auto v = take("delay_halfspan"); !v.empty()) delay_halfspan = to_double("delay_halfspan", v);
  if (auto v = take("fanout"); !v.empty()) {
    if (v == "symmetric") {
      s.cascade_fanout = false;
    } else if (v == "cascade") {
      s.cascade_fanout = true;
    } else {
      throw std::invalid_argument("config: fanout must be symmetric or cascade");
    }
  }
  if (auto v = take("efficiency"); !v.empty()) s.efficiency = to_double("efficiency", v);
  if (auto v = take("order"); !v.empty()) s.order = int(to_int("order", v));
  if (auto v = take("cutoff"); !v.empty()) s.cutoff = int(to_int("cutoff", v));
  if (auto v = take("shots"); !v.empty()) s.shots = to_int("shots", v);
  if (auto v = take("seed"); !v.empty()) s.seed = std::uint64_t(to_int("seed", v));

  if (s.delays.empty() && (delay_points != 21 || delay_halfspan > 0.0)) {
    if (delay_points < 2) throw std::invalid_argument("config: delay_points must be >= 2");
    double half = delay_halfspan > 0.0 ? delay_halfspan : 3.0;
    s.delays = default_delay_grid(s.overlap, delay_points, half);
  }
  for (std::size_t i = 1; i < s.delays.size(); ++i) {
    if (!(s.delays[i] > s.delays[i - 1])) {
      throw std::invalid_argument("config: delays must be strictly increasing");
    }
  }
}

void reject_unknown(const std::map<std::string, std::string>& kv) {
  if (!kv.empty()) {
    throw std::invalid_argument("config: unknown key " + kv.begin()->first);
  }
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::string t = trim(text);
  if (t.empty()) throw std::invalid_argument("empty complex value");
  if (t.back() == 'i' || t.back() == 'j') {
    std::string body = t.substr(0, t.size() - 1);
    // split "a+bi" / "a-bi" at the last sign that is not an exponent sign
    for (std::size_t pos = body.size(); pos-- > 1;) {
      char c = body[pos];
      if ((c == '+' || c == '-') && body[pos - 1] != 'e' && body[pos - 1] != 'E') {
        double re = to_double("complex", trim(body.substr(0, pos)));
        std::string imag = trim(body.substr(pos + 1));
        double im = imag.empty() ? 1.0 : to_double("complex", imag);
        return {re, c == '-' ? -im : im};
      }
    }
    return {0.0, to_double("complex", body)};
  }
  return {to_double("complex", t), 0.0};
}

AmplifierScanConfig parse_amplifier_config(std::istream& in) {
  auto kv = read_key_values(in);
  AmplifierScanConfig cfg;
  apply_shared(cfg, kv);
  reject_unknown(kv);
  return cfg;
}

BeamSplitterScanConfig parse_beamsplitter_config(std::istream& in) {
  auto kv = read_key_values(in);
  BeamSplitterScanConfig cfg;
  if (auto it = kv.find("bs_t"); it != kv.end()) {
    cfg.bs_t = to_double("bs_t", it->second);
    kv.erase(it);
  }
  if (auto it = kv.find("bs_r"); it != kv.end()) {
    cfg.bs_r = to_double("bs_r", it->second);
    kv.erase(it);
  }
  apply_shared(cfg, kv);
  reject_unknown(kv);
  return cfg;
}

void write_scan_csv(std::ostream& out, const std::vector<ScanPoint>& points) {
  out << "delay,value,sigma\n";
  char buf[96];
  for (const auto& p : points) {
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g\n", p.delay, p.value, p.sigma);
    out << buf;
  }
}

std::vector<ScanPoint> read_scan_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || trim(line) != "delay,value,sigma") {
    throw std::invalid_argument("scan csv: missing 'delay,value,sigma' header");
  }
  std::vector<ScanPoint> points;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (trim(line).empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    double vals[3];
    for (int i = 0; i < 3; ++i) {
      if (!std::getline(ss, cell, ',')) {
        throw std::invalid_argument("scan csv: short row at line " + std::to_string(lineno));
      }
      vals[i] = to_double("csv", trim(cell));
    }
    points.push_back({vals[0], vals[1], vals[2]});
  }
  return points;
}

std::string format_enhancement_report(const EnhancementReport& report) {
  std::ostringstream out;
  out << "N amplifier_rate_R bs_indistinguishable bs_distinguishable ratio\n";
  out.precision(12);
  for (const auto& row : report.rows) {
    out << row.n << ' ' << row.amplifier_rate << ' ' << row.bs_indistinguishable << ' '
        << row.bs_distinguishable << ' ' << row.ratio << '\n';
  }
  return out.str();
}

}  // namespace stimint
