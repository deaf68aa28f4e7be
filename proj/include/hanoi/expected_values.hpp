#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hanoi/permgroup.hpp"

namespace hanoi {

struct ExpectedEntry {
  std::string key;
  std::string value;
  std::string statement;
};

/// The shipped table of expected constants (data/expected_values.tsv).
const std::vector<ExpectedEntry>& expected_table();

/// Throws Error for an unknown key.
const ExpectedEntry& expected_entry(std::string_view key);
const std::string& expected(std::string_view key);
BigInt expected_int(std::string_view key);
bool has_expected(std::string_view key);

// Closed forms for the parametric families.

/// |Stab(n)/Stab(n+1)| = 2^(2*3^(n-1)) * 3^(3^n), n >= 1.
BigInt level_quotient_order(int n);
/// |G_N| = 6 * prod_{n=1}^{N-1} |Stab(n)/Stab(n+1)|.
BigInt quotient_order(int depth);
/// |Q_{n,n+1}| = 2^(2*3^(n-1)).
BigInt q_order_closed_form(int n);
/// |Gamma_n| = 2^(2*(3^(n-1)+1)).
BigInt gamma_order_closed_form(int n);
/// |K_{n,n+1}| = 2^(2*3^n).
BigInt k_order_closed_form(int n);

BigInt pow_big(unsigned base, std::size_t exponent);
std::size_t pow3(int n);

}  // namespace hanoi
