#include "cartier/spec_file.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <sstream>

#include "cartier/error.hpp"

namespace cartier {

namespace {

constexpr std::array<std::string_view, 5> kKeyOrder = {"p", "e", "modulus", "genus", "f"};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::string anchor(const std::string& source, std::size_t line) {
  return source + ":" + std::to_string(line) + ": ";
}

std::uint64_t parse_positive(std::string_view value, const std::string& where, std::string_view key) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size() || v == 0) {
    throw ParseError(where + "'" + std::string(key) + "' must be a positive integer, got '" +
                     std::string(value) + "'");
  }
  return v;
}

}  // namespace

std::vector<std::string> split_list(std::string_view text) {
  text = trim(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') {
    throw ParseError("expected a bracketed list, got '" + std::string(text) + "'");
  }
  const std::string_view body = text.substr(1, text.size() - 2);
  if (trim(body).empty()) return {};
  std::vector<std::string> items;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= body.size(); ++i) {
    if (i == body.size() || (body[i] == ',' && depth == 0)) {
      const std::string_view item = trim(body.substr(start, i - start));
      if (item.empty()) throw ParseError("empty item in list '" + std::string(text) + "'");
      items.emplace_back(item);
      start = i + 1;
      continue;
    }
    if (body[i] == '[') ++depth;
    if (body[i] == ']' && --depth < 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
  }
  if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(text) + "'");
  return items;
}

SpecDocument parse_curve_spec(std::string_view text, const std::string& source) {
  SpecDocument doc;
  doc.source = source;
  std::size_t next = 0;  // index into kKeyOrder
  std::size_t line_no = 0;
  std::size_t last_line = 0;

  std::istringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    last_line = line_no;
    const std::string where = anchor(source, line_no);

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(where + "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    std::size_t pos = 0;
    while (pos < kKeyOrder.size() && kKeyOrder[pos] != key) ++pos;
    if (pos == kKeyOrder.size()) throw ParseError(where + "unknown key '" + std::string(key) + "'");
    if (pos < next || doc.lines.count(std::string(key)) != 0) {
      throw ParseError(where + "key '" + std::string(key) + "' is duplicated or out of order");
    }
    if (key == "modulus" && doc.spec.e == 1) {
      throw ParseError(where + "'modulus' must be omitted when e = 1");
    }
    // Skipping ahead past a required key means that key is missing.
    for (std::size_t k = next; k < pos; ++k) {
      if (kKeyOrder[k] == "modulus" && doc.spec.e == 1) continue;
      throw ParseError(where + "missing key '" + std::string(kKeyOrder[k]) + "' before '" +
                       std::string(key) + "'");
    }
    next = pos + 1;
    doc.lines[std::string(key)] = line_no;

    if (key == "p") {
      doc.spec.p = parse_positive(value, where, key);
    } else if (key == "e") {
      const auto e = parse_positive(value, where, key);
      if (e > 64) throw ParseError(where + "'e' is unreasonably large");
      doc.spec.e = static_cast<unsigned>(e);
    } else if (key == "modulus") {
      std::vector<std::string> items;
      try {
        items = split_list(value);
      } catch (const ParseError& err) {
        throw ParseError(where + err.what());
      }
      for (const auto& item : items) {
        Residue c = 0;
        auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), c);
        if (ec != std::errc{} || ptr != item.data() + item.size()) {
          throw ParseError(where + "modulus entry '" + item + "' is not a non-negative integer");
        }
        doc.spec.modulus.push_back(c);
      }
    } else if (key == "genus") {
      const auto g = parse_positive(value, where, key);
      if (g > 1000) throw ParseError(where + "'genus' is unreasonably large");
      doc.spec.genus = static_cast<unsigned>(g);
    } else {
      try {
        doc.spec.f = split_list(value);
      } catch (const ParseError& err) {
        throw ParseError(where + err.what());
      }
    }
  }

  for (std::size_t k = next; k < kKeyOrder.size(); ++k) {
    if (kKeyOrder[k] == "modulus" && doc.spec.e == 1) continue;
    throw ParseError(anchor(source, last_line + 1) + "missing key '" + std::string(kKeyOrder[k]) + "'");
  }
  return doc;
}

SpecDocument read_curve_spec(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open spec file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_curve_spec(buffer.str(), path);
}

FieldContext build_field(const SpecDocument& doc) {
  const auto& spec = doc.spec;
  const auto line = [&](const char* key) {
    const auto it = doc.lines.find(key);
    return anchor(doc.source, it == doc.lines.end() ? 0 : it->second);
  };
  if (spec.p % 2 == 0) {
    throw ValidationError(line("p") + "p = " + std::to_string(spec.p) +
                          ": odd characteristic is required (y^2 = f(x) model)");
  }
  if (!is_prime(spec.p)) throw ValidationError(line("p") + "p = " + std::to_string(spec.p) + " is not prime");
  if (spec.e == 1) {
    try {
      return FieldContext::prime(spec.p);
    } catch (const ValidationError& err) {
      throw ValidationError(line("p") + err.what());
    }
  }
  if (spec.modulus.size() != spec.e + 1) {
    throw ValidationError(line("modulus") + "modulus must have e + 1 = " + std::to_string(spec.e + 1) +
                          " coefficients");
  }
  try {
    return FieldContext(spec.p, spec.modulus);
  } catch (const ValidationError& err) {
    throw ValidationError(line("modulus") + err.what());
  }
}

HyperellipticCurve build_curve(const SpecDocument& doc) {
  const FieldContext ctx = build_field(doc);
  const auto it = doc.lines.find("f");
  const std::string where = anchor(doc.source, it == doc.lines.end() ? 0 : it->second);
  Polynomial f(ctx);
  try {
    f = Polynomial::parse(ctx, doc.spec.f);
  } catch (const ParseError& err) {
    throw ParseError(where + err.what());
  }
  try {
    return make_curve(ctx, std::move(f), doc.spec.genus);
  } catch (const ValidationError& err) {
    throw ValidationError(where + err.what());
  }
}

std::string format_curve_spec(const CurveSpec& spec) {
  std::ostringstream out;
  out << "p = " << spec.p << '\n' << "e = " << spec.e << '\n';
  if (spec.e != 1) {
    out << "modulus = [";
    for (std::size_t i = 0; i < spec.modulus.size(); ++i) out << (i ? "," : "") << spec.modulus[i];
    out << "]\n";
  }
  out << "genus = " << spec.genus << '\n' << "f = [";
  for (std::size_t i = 0; i < spec.f.size(); ++i) out << (i ? "," : "") << spec.f[i];
  out << "]\n";
  return out.str();
}

}  // namespace cartier
