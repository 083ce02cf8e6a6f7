#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

namespace minram {

struct Abelian {
  std::vector<std::uint64_t> orders;  ///< cyclic factor orders, any form
};
/// Dihedral group of the given order 2a.
struct Dihedral {
  std::uint64_t order = 0;
};
struct SymmetricS3 {};
/// C_{n_1} wr C_{n_2} wr ... with every n_i a power of the prime l.
struct IteratedWreathCyclic {
  std::uint64_t l = 0;
  std::vector<std::uint64_t> orders;
};
/// Escape hatch: user-supplied G^ab and (G/p(G))^ab per prime.
struct Explicit {
  std::vector<std::uint64_t> ab;
  std::map<std::uint64_t, std::vector<std::uint64_t>> p_quotient_ab;
  std::uint64_t order = 0;
};

using GroupDescriptor = std::variant<Abelian, Dihedral, SymmetricS3, IteratedWreathCyclic, Explicit>;

/// abelian:2,2 | dihedral:8 | s3 | wreath:l=3:3,9 | explicit:ab=2,2;p3=2;order=12
GroupDescriptor parse_group(std::string_view text);
std::string to_string(const GroupDescriptor& g);

/// Invariant-factor form, ascending, each entry dividing the next. Entries
/// equal to 1 never appear; an empty result is the trivial group.
std::vector<std::uint64_t> invariant_factors(const std::vector<std::uint64_t>& orders);

std::uint64_t group_order(const GroupDescriptor& g);
/// G^ab in invariant-factor form.
std::vector<std::uint64_t> abelianization(const GroupDescriptor& g);
/// (G/p(G))^ab in invariant-factor form, p(G) the subgroup generated by
/// elements of p-power order.
std::vector<std::uint64_t> p_quotient_abelianization(const GroupDescriptor& g, std::uint64_t p);

bool is_trivial(const GroupDescriptor& g);

/// d+1 when p divides |G^ab|, else max(d, 1), with d the number of
/// invariant factors of (G/p(G))^ab. Trivial G is a DomainError.
unsigned bound(const GroupDescriptor& g, std::uint64_t p);

enum class BoundStatus { Matches, AboveBound, Violation };
std::string_view to_string(BoundStatus s);

struct BoundVerdict {
  unsigned bound = 0;
  unsigned observed = 0;
  BoundStatus status = BoundStatus::Matches;

  nlohmann::json to_json() const;
  static BoundVerdict from_json(const nlohmann::json& j);
};

BoundVerdict verdict(const GroupDescriptor& g, std::uint64_t p, unsigned observed);

/// Direct product as an Explicit descriptor; p(G x H) = p(G) x p(H).
Explicit direct_product(const std::vector<GroupDescriptor>& factors);

}  // namespace minram
