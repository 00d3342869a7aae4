#include "ukp/instance_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "ukp/errors.hpp"

namespace ukp {

namespace {

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::istringstream in{std::string(line)};
  std::string field;
  while (in >> field) fields.push_back(field);
  return fields;
}

Rational parse_field(std::string_view text, int line_no, const char* what) {
  auto value = Rational::parse(text);
  if (!value) {
    throw ParseError(line_no, std::string("malformed ") + what + " '" + std::string(text) + "'");
  }
  return *value;
}

}  // namespace

LoadedInstance parse_instance(std::string_view text) {
  Rational capacity(1);
  bool capacity_seen = false;
  struct RawItem {
    Rational profit;
    Rational size;
    int line;
  };
  std::vector<RawItem> raw;

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(
        start, end == std::string_view::npos ? std::string_view::npos : end - start);
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    const auto fields = split_fields(line);
    if (fields.empty()) continue;

    if (fields[0] == "c") {
      if (fields.size() != 2) throw ParseError(line_no, "expected 'c <capacity>'");
      if (capacity_seen) throw ParseError(line_no, "duplicate capacity line");
      capacity = parse_field(fields[1], line_no, "capacity");
      if (capacity.is_zero()) throw ParseError(line_no, "capacity must be positive");
      capacity_seen = true;
    } else if (fields[0] == "item") {
      if (fields.size() != 3) throw ParseError(line_no, "expected 'item <profit> <size>'");
      RawItem item;
      item.profit = parse_field(fields[1], line_no, "profit");
      item.size = parse_field(fields[2], line_no, "size");
      item.line = line_no;
      if (item.profit.is_zero()) throw ParseError(line_no, "item profit must be positive");
      if (item.size.is_zero()) throw ParseError(line_no, "item size must be positive");
      if (item.profit > Rational(1)) {
        throw ParseError(line_no, "item profit must be at most 1");
      }
      raw.push_back(std::move(item));
    } else {
      throw ParseError(line_no, "unknown directive '" + fields[0] + "'");
    }
  }

  std::vector<Item> items;
  items.reserve(raw.size());
  std::size_t index = 0;
  std::size_t dropped = 0;
  const Rational one(1);
  for (RawItem& item : raw) {
    Rational size = item.size / capacity;
    if (size > one) {
      ++dropped;
      ++index;
      continue;
    }
    items.push_back(Item{std::move(item.profit), std::move(size), index});
    ++index;
  }
  if (items.empty()) {
    throw EmptyInstanceError(raw.empty() ? "instance has no items"
                                         : "every item exceeds the capacity");
  }
  return LoadedInstance{Instance(std::move(items)), dropped, std::move(capacity)};
}

std::string render_instance(const Instance& instance) {
  std::ostringstream out;
  out << "c 1/1\n";
  for (const Item& item : instance.items()) {
    out << "item " << item.profit << " " << item.size << "\n";
  }
  return out.str();
}

LoadedInstance load_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error("cannot open instance file '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

}  // namespace ukp
