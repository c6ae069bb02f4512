#ifndef FIBTREE_IDENTITIES_HPP
#define FIBTREE_IDENTITIES_HPP

#include "fibtree/fib_sequence.hpp"
#include "fibtree/identity_report.hpp"

#include <string>
#include <vector>

namespace fibtree {

// Exact checks of the generalized Fibonacci identities. Every check compares
// both sides as Rationals; there is no tolerance anywhere.

// G_n = G_{n-i+1} F_i + G_{n-i} F_{i-1}, 1 <= i <= n.
IdentityReport check_ruggles(const FibSequence& seq, long n, long i);

// F_n = F_{n-i+1} F_i + F_{n-i} F_{i-1}, 1 <= i <= n.
IdentityReport check_corollary1(long n, long i);

// beta G_n + alpha G_{n-1} = G_{n-i+1} G_i + G_{n-i} G_{i-1}, 1 <= i <= n.
IdentityReport check_gg(const FibSequence& seq, long n, long i);

// Two-sequence variant: beta' G_n + alpha' G_{n-1} = G_{n-i+1} G'_i +
// G_{n-i} G'_{i-1} with G from seq_a and G' (seeds alpha', beta') from seq_b.
IdentityReport check_two_sequence(const FibSequence& seq_a, const FibSequence& seq_b, long n,
                                  long i);

enum class IdentityKind { kRuggles, kCorollary1, kGg, kTwoSequence };

// "ruggles" | "corollary1" | "gg" | "two-seq"; anything else throws
// std::invalid_argument.
IdentityKind identity_kind_from_string(const std::string& name);
std::string identity_kind_name(IdentityKind kind);

// Runs the chosen check over all 1 <= i <= n <= n_max, stopping at the first
// counterexample. kCorollary1 needs no sequences, kTwoSequence needs two,
// the rest need one.
IdentityReport sweep_identity(IdentityKind which, const std::vector<FibSequence>& seqs,
                              long n_max);

}  // namespace fibtree

#endif
