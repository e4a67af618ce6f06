#include "orbitforge/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "orbitforge/error.hpp"

namespace orbitforge {

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
  for (int x : parts) require(x >= 0, "partition parts are nonnegative");
  parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

Partition dual(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> d(static_cast<std::size_t>(p.parts.front()), 0);
  for (int x : p.parts)
    for (int j = 0; j < x; ++j) ++d[static_cast<std::size_t>(j)];
  return Partition(std::move(d));
}

bool dominates(const Partition& a, const Partition& b) {
  const std::size_t len = std::max(a.length(), b.length());
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.length() ? a.parts[i] : 0;
    sb += i < b.length() ? b.parts[i] : 0;
    if (sa < sb) return false;
  }
  return sa == sb;
}

Partition padded_sum(const std::vector<Partition>& ps) {
  std::size_t len = 0;
  for (const auto& p : ps) len = std::max(len, p.length());
  std::vector<int> s(len, 0);
  for (const auto& p : ps)
    for (std::size_t i = 0; i < p.length(); ++i) s[i] += p.parts[i];
  return Partition(std::move(s));
}

int centralizer_dim_formula(const Partition& p) {
  int t = 0;
  for (int x : dual(p).parts) t += x * x;
  return t;
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rem, int maxpart) {
    if (rem == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(rem, maxpart); k >= 1; --k) {
      cur.push_back(k);
      rec(rem - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<std::vector<int>> compositions_of(int n) {
  std::vector<std::vector<int>> out;
  if (n <= 0) return out;
  // Bit i of mask set means "cut after position i".
  for (unsigned mask = 0; mask < (1U << (n - 1)); ++mask) {
    std::vector<int> c;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1U << i)) {
        c.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    c.push_back(run);
    out.push_back(std::move(c));
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.length(); ++i) os << (i ? "," : "") << p.parts[i];
  os << ')';
  return os.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }),
               item.end());
    if (item.empty()) continue;
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(item, &pos);
    } catch (const std::exception&) {
      fail_precondition("integer list entry '" + item + "' is an integer");
    }
    require(pos == item.size(), "integer list entry '" + item + "' is an integer");
    out.push_back(v);
  }
  return out;
}

Partition parse_partition(const std::string& text) {
  auto parts = parse_int_list(text);
  for (int x : parts) require(x > 0, "partition parts are positive");
  return Partition(std::move(parts));
}

}  // namespace orbitforge
