#pragma once

#include <compare>
#include <iterator>
#include <cstdint>
#include <string>
#include <vector>

namespace implab {

// An alternative is identified by its index; the name is for IO only.
struct Alternative {
  int index = 0;
  std::string name;
};

// Default display names: "a", "b", "c", ... falling back to x<i> past 'z'.
std::vector<std::string> default_alternative_names(int m);

// Strict total order over alternatives 0..m-1, best first.
class Ranking {
 public:
  explicit Ranking(std::vector<int> order);
  static Ranking identity(int m);

  int alternative_count() const { return static_cast<int>(order_.size()); }
  const std::vector<int>& order() const { return order_; }
  int at(int position) const;
  int position_of(int alternative) const;
  bool prefers(int a, int b) const;  // a strictly above b

  bool operator==(const Ranking& other) const = default;
  std::strong_ordering operator<=>(const Ranking& other) const = default;

 private:
  std::vector<int> order_;
};

bool prefers(const Ranking& r, int a, int b);

// All m! rankings in lexicographic order of their order vectors. 1 <= m <= 6.
std::vector<Ranking> enumerate_rankings(int m);

// Lexicographic rank of r among enumerate_rankings(m).
long long ranking_rank(const Ranking& r);
Ranking nth_ranking(int m, long long rank);

// Result of deleting a set of alternatives: the survivors are renumbered
// densely, preserving the order of their original indices. kept[new] = old.
struct RestrictedRanking {
  Ranking ranking;
  std::vector<int> kept;
};

RestrictedRanking restrict_ranking(const Ranking& r, const std::vector<int>& removed);

// One ranking per voter, all over the same m alternatives.
class Profile {
 public:
  explicit Profile(std::vector<Ranking> rankings);

  int voter_count() const { return static_cast<int>(rankings_.size()); }
  int alternative_count() const { return rankings_.front().alternative_count(); }
  const Ranking& ranking_of(int voter) const;
  const std::vector<Ranking>& rankings() const { return rankings_; }

  bool operator==(const Profile& other) const = default;

 private:
  std::vector<Ranking> rankings_;
};

long long profile_count(int n, int m);

// Profiles are ordered lexicographically with voter 0 most significant.
long long profile_rank(const Profile& p);
Profile nth_profile(int n, int m, long long rank);

// Lazy forward range over all (m!)^n profiles in rank order.
// 1 <= n <= 4, 1 <= m <= 4.
class ProfileRange {
 public:
  ProfileRange(int n, int m);

  class iterator {
   public:
    using value_type = Profile;
    using iterator_category = std::input_iterator_tag;
    using difference_type = std::ptrdiff_t;
    using pointer = const Profile*;
    using reference = const Profile&;
    iterator() = default;
    iterator(const ProfileRange* range, long long rank);
    const Profile& operator*() const { return current_; }
    const Profile* operator->() const { return &current_; }
    iterator& operator++();
    bool operator==(const iterator& other) const { return rank_ == other.rank_; }

   private:
    void materialize();
    const ProfileRange* range_ = nullptr;
    long long rank_ = -1;
    std::vector<int> digits_;
    Profile current_{{Ranking::identity(1)}};
  };

  iterator begin() const { return iterator(this, 0); }
  iterator end() const { return iterator(nullptr, count_); }
  long long size() const { return count_; }
  int n() const { return n_; }
  int m() const { return m_; }
  const std::vector<Ranking>& ranking_table() const { return table_; }

 private:
  int n_;
  int m_;
  long long count_;
  std::vector<Ranking> table_;
};

ProfileRange enumerate_profiles(int n, int m);

}  // namespace implab
