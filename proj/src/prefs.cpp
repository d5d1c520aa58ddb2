#include "implab/prefs.hpp"

#include <algorithm>
#include <numeric>

#include "implab/errors.hpp"

namespace implab {

namespace {

long long factorial(int m) {
  long long f = 1;
  for (int i = 2; i <= m; ++i) f *= i;
  return f;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw InputError(msg);
}

}  // namespace

std::vector<std::string> default_alternative_names(int m) {
  require(m >= 1, "alternative count must be positive");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (i < 26) {
      names.push_back(std::string(1, static_cast<char>('a' + i)));
    } else {
      names.push_back("x" + std::to_string(i));
    }
  }
  return names;
}

Ranking::Ranking(std::vector<int> order) : order_(std::move(order)) {
  require(!order_.empty(), "ranking must cover at least one alternative");
  std::vector<char> seen(order_.size(), 0);
  for (int a : order_) {
    require(a >= 0 && a < static_cast<int>(order_.size()),
            "ranking entry out of range");
    require(!seen[static_cast<std::size_t>(a)], "ranking repeats an alternative");
    seen[static_cast<std::size_t>(a)] = 1;
  }
}

Ranking Ranking::identity(int m) {
  require(m >= 1, "alternative count must be positive");
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  return Ranking(std::move(order));
}

int Ranking::at(int position) const {
  require(position >= 0 && position < alternative_count(), "position out of range");
  return order_[static_cast<std::size_t>(position)];
}

int Ranking::position_of(int alternative) const {
  require(alternative >= 0 && alternative < alternative_count(),
          "alternative out of range");
  for (int p = 0; p < alternative_count(); ++p) {
    if (order_[static_cast<std::size_t>(p)] == alternative) return p;
  }
  throw InternalInvariantBroken("ranking lost an alternative");
}

bool Ranking::prefers(int a, int b) const {
  require(a != b, "comparison needs two distinct alternatives");
  return position_of(a) < position_of(b);
}

bool prefers(const Ranking& r, int a, int b) { return r.prefers(a, b); }

std::vector<Ranking> enumerate_rankings(int m) {
  require(m >= 1 && m <= 6, "ranking enumeration supports 1 <= m <= 6");
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::vector<Ranking> out;
  out.reserve(static_cast<std::size_t>(factorial(m)));
  do {
    out.push_back(Ranking(order));
  } while (std::next_permutation(order.begin(), order.end()));
  return out;
}

long long ranking_rank(const Ranking& r) {
  // Lehmer code: count smaller unused entries at each position.
  const int m = r.alternative_count();
  long long rank = 0;
  for (int i = 0; i < m; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < m; ++j) {
      if (r.at(j) < r.at(i)) ++smaller;
    }
    rank += smaller * factorial(m - 1 - i);
  }
  return rank;
}

Ranking nth_ranking(int m, long long rank) {
  require(m >= 1, "alternative count must be positive");
  require(rank >= 0 && rank < factorial(m), "ranking rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(m));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> order;
  order.reserve(pool.size());
  for (int i = m; i >= 1; --i) {
    const long long block = factorial(i - 1);
    const auto pick = static_cast<std::size_t>(rank / block);
    rank %= block;
    order.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Ranking(std::move(order));
}

RestrictedRanking restrict_ranking(const Ranking& r, const std::vector<int>& removed) {
  const int m = r.alternative_count();
  std::vector<char> gone(static_cast<std::size_t>(m), 0);
  for (int a : removed) {
    require(a >= 0 && a < m, "removed alternative out of range");
    gone[static_cast<std::size_t>(a)] = 1;
  }
  std::vector<int> kept;
  std::vector<int> new_index(static_cast<std::size_t>(m), -1);
  for (int a = 0; a < m; ++a) {
    if (!gone[static_cast<std::size_t>(a)]) {
      new_index[static_cast<std::size_t>(a)] = static_cast<int>(kept.size());
      kept.push_back(a);
    }
  }
  require(kept.size() >= 2, "restriction must leave at least two alternatives");
  std::vector<int> order;
  order.reserve(kept.size());
  for (int a : r.order()) {
    if (!gone[static_cast<std::size_t>(a)]) {
      order.push_back(new_index[static_cast<std::size_t>(a)]);
    }
  }
  return RestrictedRanking{Ranking(std::move(order)), std::move(kept)};
}

Profile::Profile(std::vector<Ranking> rankings) : rankings_(std::move(rankings)) {
  require(!rankings_.empty(), "profile needs at least one voter");
  const int m = rankings_.front().alternative_count();
  for (const Ranking& r : rankings_) {
    require(r.alternative_count() == m, "profile mixes alternative counts");
  }
}

const Ranking& Profile::ranking_of(int voter) const {
  require(voter >= 0 && voter < voter_count(), "voter index out of range");
  return rankings_[static_cast<std::size_t>(voter)];
}

long long profile_count(int n, int m) {
  require(n >= 1 && n <= 4, "profile enumeration supports 1 <= n <= 4");
  require(m >= 1 && m <= 4, "profile enumeration supports 1 <= m <= 4");
  long long count = 1;
  for (int i = 0; i < n; ++i) count *= factorial(m);
  return count;
}

long long profile_rank(const Profile& p) {
  const long long base = factorial(p.alternative_count());
  long long rank = 0;
  for (const Ranking& r : p.rankings()) {
    rank = rank * base + ranking_rank(r);
  }
  return rank;
}

Profile nth_profile(int n, int m, long long rank) {
  const long long total = profile_count(n, m);
  require(rank >= 0 && rank < total, "profile rank out of range");
  const long long base = factorial(m);
  std::vector<Ranking> rankings;
  rankings.reserve(static_cast<std::size_t>(n));
  long long scale = total / base;
  for (int v = 0; v < n; ++v) {
    rankings.push_back(nth_ranking(m, rank / scale));
    rank %= scale;
    scale /= base;
  }
  return Profile(std::move(rankings));
}

ProfileRange::ProfileRange(int n, int m)
    : n_(n), m_(m), count_(profile_count(n, m)), table_(enumerate_rankings(m)) {}

ProfileRange::iterator::iterator(const ProfileRange* range, long long rank)
    : range_(range), rank_(rank) {
  if (range_ != nullptr && rank_ < range_->size()) {
    digits_.assign(static_cast<std::size_t>(range_->n()), 0);
    materialize();
  }
}

void ProfileRange::iterator::materialize() {
  std::vector<Ranking> rankings;
  rankings.reserve(digits_.size());
  for (int d : digits_) {
    rankings.push_back(range_->ranking_table()[static_cast<std::size_t>(d)]);
  }
  current_ = Profile(std::move(rankings));
}

ProfileRange::iterator& ProfileRange::iterator::operator++() {
  ++rank_;
  if (range_ == nullptr || rank_ >= range_->size()) return *this;
  // Odometer with voter 0 as the most significant digit.
  const int base = static_cast<int>(range_->ranking_table().size());
  for (auto i = digits_.size(); i-- > 0;) {
    if (++digits_[i] < base) break;
    digits_[i] = 0;
  }
  materialize();
  return *this;
}

ProfileRange enumerate_profiles(int n, int m) { return ProfileRange(n, m); }

}  // namespace implab
