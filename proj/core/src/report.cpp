#include "peo/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace peo {

namespace {

bool valid_key(std::string_view key) {
  return !key.empty() && std::all_of(key.begin(), key.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_' || c == '.';
  });
}

std::string join_flags(const std::vector<bool>& flags, char sep) {
  std::string out;
  for (std::size_t i = 0; i < flags.size(); ++i) {
    if (i) {
      out += sep;
    }
    out += yes_no(flags[i]);
  }
  return out;
}

std::string optional_flag(const std::optional<bool>& flag) {
  return flag ? yes_no(*flag) : "unknown";
}

}  // namespace

std::string yes_no(bool flag) {
  return flag ? "yes" : "no";
}

std::string write_flat_map(const FlatMap& map) {
  std::string out;
  for (const auto& [key, value] : map) {
    if (!valid_key(key)) {
      throw std::invalid_argument("invalid flat-map key '" + key + "'");
    }
    if (value.find('\n') != std::string::npos) {
      throw std::invalid_argument("flat-map value for '" + key + "' contains a newline");
    }
    out += key;
    out += '=';
    out += value;
    out += '\n';
  }
  return out;
}

FlatMap read_flat_map(std::string_view text) {
  FlatMap map;
  std::set<std::string, std::less<>> keys;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (!line.empty() && line.back() == '\r') {
      line.remove_suffix(1);
    }
    if (line.empty()) {
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ParseError("expected key=value", line_no);
    }
    std::string key(line.substr(0, eq));
    if (!valid_key(key)) {
      throw ParseError("invalid key '" + key + "'", line_no);
    }
    if (!keys.insert(key).second) {
      throw ParseError("duplicate key '" + key + "'", line_no);
    }
    map.emplace_back(std::move(key), std::string(line.substr(eq + 1)));
  }
  return map;
}

std::optional<std::string> lookup(const FlatMap& map, std::string_view key) {
  for (const auto& [k, v] : map) {
    if (k == key) {
      return v;
    }
  }
  return std::nullopt;
}

FlatMap to_flat_map(const OrderingClassReport& r) {
  FlatMap map;
  map.emplace_back("ultrametric", yes_no(r.ultrametric));
  map.emplace_back("peo", yes_no(r.peo));
  if (r.peo_witness) {
    map.emplace_back("peo.order", format_order(*r.peo_witness));
  }
  map.emplace_back("simplicial", r.simplicial ? std::to_string(*r.simplicial + 1) : "none");
  const std::pair<const char*, const std::optional<bool>*> flags[] = {
      {"robinson", &r.robinson}, {"interval", &r.interval}, {"cocomparability", &r.cocomparability}};
  const std::optional<LinearOrder>* witnesses[] = {&r.robinson_witness, &r.interval_witness,
                                                   &r.cocomparability_witness};
  for (std::size_t i = 0; i < 3; ++i) {
    map.emplace_back(flags[i].first, optional_flag(*flags[i].second));
    if (*witnesses[i]) {
      map.emplace_back(std::string(flags[i].first) + ".order", format_order(**witnesses[i]));
    }
  }
  map.emplace_back("levels", std::to_string(r.levels_chordal.size()));
  for (std::size_t l = 0; l < r.levels_chordal.size(); ++l) {
    map.emplace_back("level." + std::to_string(l + 1) + ".chordal", yes_no(r.levels_chordal[l]));
  }
  map.emplace_back("weighted_chordless_cycle", yes_no(r.weighted_chordless_cycle.has_value()));
  if (r.weighted_chordless_cycle) {
    map.emplace_back("weighted_chordless_cycle.walk", format_walk(*r.weighted_chordless_cycle));
  }
  return map;
}

FlatMap to_flat_map(const PowerEquivalenceReport& c, const PowerChordalityReport& p) {
  FlatMap map;
  map.emplace_back("peo", yes_no(c.has_peo));
  map.emplace_back("no_weighted_chordless_cycle", yes_no(c.no_weighted_chordless_cycle));
  map.emplace_back("levels_chordal", yes_no(c.levels_chordal));
  map.emplace_back("graph_and_square_chordal", yes_no(c.graph_and_square_chordal));
  map.emplace_back("equivalent_flags_agree", yes_no(c.consistent()));
  for (std::size_t k = 0; k < p.chordal.size(); ++k) {
    map.emplace_back("power." + std::to_string(k + 1) + ".chordal", yes_no(p.chordal[k]));
  }
  map.emplace_back("power_implication", p.violation ? "violated at " + std::to_string(*p.violation)
                                                    : std::string("holds"));
  return map;
}

FlatMap to_flat_map(const Certificate& cert) {
  FlatMap map;
  if (const auto* pi = std::get_if<LinearOrder>(&cert)) {
    map.emplace_back("result", "peo");
    map.emplace_back("order", format_order(*pi));
  } else {
    const auto& pair = std::get<ForbiddenPair>(cert);
    map.emplace_back("result", "no-peo");
    map.emplace_back("walk.1", format_walk(pair.first));
    map.emplace_back("walk.2", format_walk(pair.second));
  }
  return map;
}

std::string format_report(const OrderingClassReport& r) {
  std::ostringstream out;
  out << "ultrametric (-A interpretation): " << yes_no(r.ultrametric) << '\n';
  out << "levels chordal: " << (r.levels_chordal.empty() ? "n/a" : join_flags(r.levels_chordal, '/'))
      << '\n';
  out << "weighted chordless cycle: ";
  if (r.weighted_chordless_cycle) {
    out << "yes (" << format_walk(*r.weighted_chordless_cycle) << ")\n";
  } else {
    out << "no\n";
  }
  out << "simplicial vertex: " << (r.simplicial ? std::to_string(*r.simplicial + 1) : "none")
      << '\n';
  out << "PEO: ";
  if (r.peo_witness) {
    out << "yes (" << format_order(*r.peo_witness) << ")\n";
  } else {
    out << "no\n";
  }
  out << "robinson ordering: " << optional_flag(r.robinson) << '\n';
  out << "interval ordering: " << optional_flag(r.interval) << '\n';
  out << "cocomparability ordering: " << optional_flag(r.cocomparability) << '\n';
  return out.str();
}

std::string format_report(const PowerEquivalenceReport& c, const PowerChordalityReport& p) {
  std::ostringstream out;
  out << "PEO of -D: " << yes_no(c.has_peo) << '\n';
  out << "no weighted chordless cycle in -D: " << yes_no(c.no_weighted_chordless_cycle) << '\n';
  out << "level graphs of -D chordal: " << yes_no(c.levels_chordal) << '\n';
  out << "G and G^2 chordal: " << yes_no(c.graph_and_square_chordal) << '\n';
  out << "equivalent flags agree: " << yes_no(c.consistent()) << '\n';
  out << "powers chordal (k=1.." << p.chordal.size() << "): " << join_flags(p.chordal, ' ')
      << '\n';
  out << "G^k chordal => G^(k+2) chordal: "
      << (p.violation ? "violated at k=" + std::to_string(*p.violation) : std::string("holds"))
      << '\n';
  return out.str();
}

}  // namespace peo
