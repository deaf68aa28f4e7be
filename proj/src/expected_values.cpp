#include "hanoi/expected_values.hpp"

#include <sstream>

#include "expected_table.hpp"
#include "hanoi/errors.hpp"

namespace hanoi {

const std::vector<ExpectedEntry>& expected_table() {
  static const std::vector<ExpectedEntry> table = [] {
    std::vector<ExpectedEntry> rows;
    std::istringstream in(detail::kExpectedTable);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line.front() == '#') {
        continue;
      }
      const auto t1 = line.find('\t');
      const auto t2 = line.find('\t', t1 + 1);
      if (t1 == std::string::npos || t2 == std::string::npos) {
        throw Error("malformed expected-value row: " + line);
      }
      rows.push_back({line.substr(0, t1), line.substr(t1 + 1, t2 - t1 - 1), line.substr(t2 + 1)});
    }
    return rows;
  }();
  return table;
}

bool has_expected(std::string_view key) {
  for (const auto& e : expected_table()) {
    if (e.key == key) {
      return true;
    }
  }
  return false;
}

const ExpectedEntry& expected_entry(std::string_view key) {
  for (const auto& e : expected_table()) {
    if (e.key == key) {
      return e;
    }
  }
  throw Error("no expected value for '" + std::string(key) + "'");
}

const std::string& expected(std::string_view key) { return expected_entry(key).value; }

BigInt expected_int(std::string_view key) { return BigInt(expected(key)); }

BigInt pow_big(unsigned base, std::size_t exponent) {
  BigInt r = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    r *= base;
  }
  return r;
}

std::size_t pow3(int n) {
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) {
    r *= 3;
  }
  return r;
}

BigInt level_quotient_order(int n) {
  if (n < 1) {
    throw UsageError("level quotient index starts at 1");
  }
  return pow_big(2, 2 * pow3(n - 1)) * pow_big(3, pow3(n));
}

BigInt quotient_order(int depth) {
  if (depth < 1) {
    throw UsageError("quotient depth starts at 1");
  }
  BigInt order = 6;
  for (int n = 1; n < depth; ++n) {
    order *= level_quotient_order(n);
  }
  return order;
}

BigInt q_order_closed_form(int n) { return pow_big(2, 2 * pow3(n - 1)); }

BigInt gamma_order_closed_form(int n) { return pow_big(2, 2 * (pow3(n - 1) + 1)); }

BigInt k_order_closed_form(int n) { return pow_big(2, 2 * pow3(n)); }

}  // namespace hanoi
