#include "peo/matrix.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace peo {

SymmetricMatrix::SymmetricMatrix(std::size_t n, const Value& fill)
    : n_(n), entries_(n * (n > 0 ? n - 1 : 0) / 2, fill) {
  if (n == 0) {
    throw std::invalid_argument("matrix size must be positive");
  }
}

std::size_t SymmetricMatrix::slot(Index x, Index y) const {
  if (x >= n_ || y >= n_) {
    throw std::out_of_range("matrix index out of range");
  }
  if (x == y) {
    throw std::out_of_range("diagonal entries are not stored");
  }
  if (x > y) {
    std::swap(x, y);
  }
  // row-major upper triangle without the diagonal
  return x * (2 * n_ - x - 1) / 2 + (y - x - 1);
}

void SymmetricMatrix::set(Index x, Index y, Value value) {
  auto& slot_ref = entries_[slot(x, y)];
  slot_ref = std::move(value);
  slot_ref.canonicalize();
}

SymmetricMatrix matrix_from_pairs(std::size_t n,
                                  std::span<const std::pair<Index, Index>> pairs,
                                  const Value& value, const Value& fill) {
  SymmetricMatrix a(n, fill);
  for (auto [x, y] : pairs) {
    a.set(x, y, value);
  }
  return a;
}

Value min_offdiag(const SymmetricMatrix& a) {
  if (a.size() < 2) {
    throw std::invalid_argument("min_offdiag requires n >= 2");
  }
  Value best = a(0, 1);
  for (Index x = 0; x < a.size(); ++x) {
    for (Index y = x + 1; y < a.size(); ++y) {
      if (a(x, y) < best) {
        best = a(x, y);
      }
    }
  }
  return best;
}

Value min_offdiag(const SymmetricMatrix& a, std::span<const Index> support) {
  if (support.size() < 2) {
    throw std::invalid_argument("min_offdiag requires at least two elements");
  }
  const Value* best = &a(support[0], support[1]);
  for (std::size_t i = 0; i < support.size(); ++i) {
    for (std::size_t j = i + 1; j < support.size(); ++j) {
      const Value& v = a(support[i], support[j]);
      if (v < *best) {
        best = &v;
      }
    }
  }
  return *best;
}

SymmetricMatrix negated(const SymmetricMatrix& a) {
  SymmetricMatrix out(a.size());
  for (Index x = 0; x < a.size(); ++x) {
    for (Index y = x + 1; y < a.size(); ++y) {
      out.set(x, y, -a(x, y));
    }
  }
  return out;
}

Value parse_value(std::string_view token) {
  auto fail = [&] { throw ParseError("not a number: '" + std::string(token) + "'", 0); };
  if (token.empty()) {
    fail();
  }
  std::string_view body = token;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto all_digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) {
      return std::isdigit(c) != 0;
    });
  };

  Value result;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      fail();
    }
    mpz_class d{std::string(den)};
    if (d == 0) {
      throw ParseError("zero denominator in '" + std::string(token) + "'", 0);
    }
    result = mpq_class(mpz_class(std::string(num)), d);
  } else {
    auto dot = body.find('.');
    std::string_view whole = body.substr(0, dot);
    std::string_view frac =
        dot == std::string_view::npos ? std::string_view{} : body.substr(dot + 1);
    if (whole.empty() && frac.empty()) {
      fail();
    }
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (dot != std::string_view::npos && frac.empty() && whole.empty())) {
      fail();
    }
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class num(digits.empty() ? std::string("0") : digits);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    result = mpq_class(num, den);
  }
  result.canonicalize();
  if (negative) {
    result = -result;
  }
  return result;
}

std::string format_value(const Value& v) {
  return v.get_str();
}

namespace {

std::optional<Index> parse_index(const std::string& token, std::size_t n, std::size_t line) {
  if (token.empty() || !std::all_of(token.begin(), token.end(),
                                    [](unsigned char c) { return std::isdigit(c) != 0; })) {
    throw ParseError("bad index '" + token + "'", line);
  }
  unsigned long long raw = 0;
  try {
    raw = std::stoull(token);
  } catch (const std::exception&) {
    throw ParseError("bad index '" + token + "'", line);
  }
  if (raw < 1 || raw > n) {
    throw ParseError("index " + token + " out of range 1.." + std::to_string(n), line);
  }
  return static_cast<Index>(raw - 1);
}

}  // namespace

SymmetricMatrix parse_matrix(std::istream& in) {
  std::optional<std::size_t> n;
  std::optional<Value> fill;
  std::vector<std::tuple<Index, Index, Value, std::size_t>> triples;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) {
      raw.erase(hash);
    }
    std::istringstream fields(raw);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) {
      tok.push_back(t);
    }
    if (tok.empty()) {
      continue;
    }

    if (!n) {
      if (tok.size() != 2 || tok[0] != "n") {
        throw ParseError("expected header 'n <N>'", line_no);
      }
      auto size = parse_index(tok[1], static_cast<std::size_t>(-1), line_no);
      n = *size + 1;
      continue;
    }
    if (tok[0] == "default") {
      if (tok.size() != 2) {
        throw ParseError("expected 'default <value>'", line_no);
      }
      if (fill) {
        throw ParseError("duplicate default line", line_no);
      }
      try {
        fill = parse_value(tok[1]);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line_no);
      }
      continue;
    }
    if (tok.size() != 3) {
      throw ParseError("expected '<i> <j> <value>'", line_no);
    }
    Index i = *parse_index(tok[0], *n, line_no);
    Index j = *parse_index(tok[1], *n, line_no);
    if (i == j) {
      throw ParseError("diagonal entry " + tok[0] + " " + tok[1] + " is not allowed", line_no);
    }
    Value v;
    try {
      v = parse_value(tok[2]);
    } catch (const ParseError& e) {
      throw ParseError(e.what(), line_no);
    }
    triples.emplace_back(i, j, std::move(v), line_no);
  }
  if (!n) {
    throw ParseError("missing header 'n <N>'", 0);
  }

  SymmetricMatrix a(*n, fill.value_or(Value{0}));
  std::vector<char> seen(*n * *n, 0);
  for (auto& [i, j, v, line] : triples) {
    auto lo = std::min(i, j);
    auto hi = std::max(i, j);
    auto& flag = seen[lo * *n + hi];
    if (flag && a(i, j) != v) {
      throw ParseError("conflicting values for pair " + std::to_string(lo + 1) + " " +
                           std::to_string(hi + 1),
                       line);
    }
    flag = 1;
    a.set(i, j, v);
  }
  if (!fill) {
    for (Index x = 0; x < *n; ++x) {
      for (Index y = x + 1; y < *n; ++y) {
        if (!seen[x * *n + y]) {
          throw ParseError("pair " + std::to_string(x + 1) + " " + std::to_string(y + 1) +
                               " has no value and no 'default' line was given",
                           0);
        }
      }
    }
  }
  return a;
}

SymmetricMatrix parse_matrix_string(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_matrix(in);
}

SymmetricMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open '" + path + "'");
  }
  return parse_matrix(in);
}

std::string serialize_matrix(const SymmetricMatrix& a) {
  std::ostringstream out;
  out << "n " << a.size() << '\n';
  for (Index x = 0; x < a.size(); ++x) {
    for (Index y = x + 1; y < a.size(); ++y) {
      out << x + 1 << ' ' << y + 1 << ' ' << format_value(a(x, y)) << '\n';
    }
  }
  return out.str();
}

}  // namespace peo
