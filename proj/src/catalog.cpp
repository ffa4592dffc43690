#include "istone/catalog.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "istone/error.hpp"

namespace istone {
namespace catalog {

namespace {

using json = nlohmann::json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

int parse_int(const std::string& s) {
  try {
    std::size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw Error("Unsupported", "bad integer: " + s);
    return v;
  } catch (const Error&) {
    throw;
  } catch (...) {
    throw Error("Unsupported", "bad integer: " + s);
  }
}

// Partial injections on {0..n-1}: img[x] = image of x, or -1. Elements are
// ordered by (domain mask, image tuple), which puts the empty map (the zero)
// first. Composition is (st)(x) = s(t(x)).
struct PInj {
  std::vector<int> img;

  friend bool operator==(const PInj&, const PInj&) = default;
  friend auto operator<=>(const PInj& a, const PInj& b) {
    int ma = 0, mb = 0;
    for (std::size_t i = 0; i < a.img.size(); ++i) {
      if (a.img[i] >= 0) ma |= 1 << i;
      if (b.img[i] >= 0) mb |= 1 << i;
    }
    if (ma != mb) return ma <=> mb;
    return a.img <=> b.img;
  }
};

PInj pinj_compose(const PInj& s, const PInj& t) {
  int n = static_cast<int>(s.img.size());
  PInj out{std::vector<int>(n, -1)};
  for (int x = 0; x < n; ++x) {
    int y = t.img[x];
    if (y >= 0 && s.img[y] >= 0) out.img[x] = s.img[y];
  }
  return out;
}

std::string pinj_name(const PInj& p) {
  std::string s;
  for (std::size_t x = 0; x < p.img.size(); ++x) {
    if (p.img[x] < 0) continue;
    if (!s.empty()) s += ",";
    s += std::to_string(x + 1) + "->" + std::to_string(p.img[x] + 1);
  }
  return s.empty() ? "0" : s;
}

InverseSemigroup build_sym_inv(int n) {
  if (n < 1) throw Error("Unsupported", "sym_inv needs n >= 1");
  if (n > 3) throw Error("TooLarge", "sym_inv is limited to n <= 3");

  std::vector<PInj> elems;
  std::vector<int> stack(n, -1);
  // Enumerate all partial injections by choosing an image or -1 per point.
  auto rec = [&](auto&& self, int x) -> void {
    if (x == n) {
      elems.push_back(PInj{stack});
      return;
    }
    self(self, x + 1);  // x undefined
    for (int y = 0; y < n; ++y) {
      bool used = false;
      for (int z = 0; z < x; ++z) used |= (stack[z] == y);
      if (used) continue;
      stack[x] = y;
      self(self, x + 1);
      stack[x] = -1;
    }
  };
  rec(rec, 0);
  std::sort(elems.begin(), elems.end());

  std::map<PInj, int> index;
  for (std::size_t i = 0; i < elems.size(); ++i) index[elems[i]] = static_cast<int>(i);

  int m = static_cast<int>(elems.size());
  std::vector<int> table(m * m);
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    names[i] = pinj_name(elems[i]);
    for (int j = 0; j < m; ++j) {
      table[i * m + j] = index.at(pinj_compose(elems[i], elems[j]));
    }
  }
  return InverseSemigroup::validate(m, std::move(table), std::move(names));
}

InverseSemigroup build_chain(int k) {
  if (k < 1) throw Error("Unsupported", "chain needs k >= 1");
  if (k > 64) throw Error("TooLarge", "chain is limited to k <= 64");
  std::vector<int> table(k * k);
  std::vector<std::string> names(k);
  for (int i = 0; i < k; ++i) {
    names[i] = i == 0 ? "0" : "e" + std::to_string(i);
    for (int j = 0; j < k; ++j) table[i * k + j] = std::min(i, j);
  }
  return InverseSemigroup::validate(k, std::move(table), std::move(names));
}

InverseSemigroup build_antichain(int k) {
  if (k < 1) throw Error("Unsupported", "antichain needs k >= 1 atoms");
  if (k > 63) throw Error("TooLarge", "antichain is limited to k <= 63");
  int m = k + 1;
  std::vector<int> table(m * m, 0);
  std::vector<std::string> names(m);
  names[0] = "0";
  for (int i = 1; i < m; ++i) {
    names[i] = "a" + std::to_string(i);
    table[i * m + i] = i;
  }
  return InverseSemigroup::validate(m, std::move(table), std::move(names));
}

InverseSemigroup build_powerset(int k) {
  if (k < 0) throw Error("Unsupported", "powerset needs k >= 0");
  if (k > 4) throw Error("TooLarge", "powerset is limited to k <= 4");
  int m = 1 << k;
  std::vector<int> table(m * m);
  std::vector<std::string> names(m);
  for (int i = 0; i < m; ++i) {
    std::string nm = "{";
    for (int b = 0; b < k; ++b) {
      if (i & (1 << b)) {
        if (nm.size() > 1) nm += ",";
        nm += std::to_string(b + 1);
      }
    }
    names[i] = nm + "}";
    for (int j = 0; j < m; ++j) table[i * m + j] = i & j;
  }
  return InverseSemigroup::validate(m, std::move(table), std::move(names));
}

InverseSemigroup build_cyclic0(int n) {
  if (n < 1) throw Error("Unsupported", "group0:cyclic needs n >= 1");
  if (n > 24) throw Error("TooLarge", "group0:cyclic is limited to n <= 24");
  std::vector<int> table(n * n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = "g" + std::to_string(i);
    for (int j = 0; j < n; ++j) table[i * n + j] = (i + j) % n;
  }
  return InverseSemigroup::adjoin_zero(n, table, names);
}

InverseSemigroup build_sym3_0() {
  // S3 as permutations of {1,2,3} in one-line notation, identity first.
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto index_of = [&](const std::array<int, 3>& p) {
    for (std::size_t i = 0; i < perms.size(); ++i) {
      if (perms[i] == p) return static_cast<int>(i);
    }
    throw Error("Unsupported", "permutation composition escaped S3");
  };
  int n = 6;
  std::vector<int> table(n * n);
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    names[i] = std::to_string(perms[i][0] + 1) + std::to_string(perms[i][1] + 1) +
               std::to_string(perms[i][2] + 1);
    for (int j = 0; j < n; ++j) {
      std::array<int, 3> c{};
      for (int x = 0; x < 3; ++x) c[x] = perms[i][perms[j][x]];
      table[i * n + j] = index_of(c);
    }
  }
  return InverseSemigroup::adjoin_zero(n, table, names);
}

InverseSemigroup build_brandt_cyclic(int m, int n) {
  if (m < 1 || n < 1) throw Error("Unsupported", "brandt needs m,n >= 1");
  if (n * n * m + 1 > 200) throw Error("TooLarge", "brandt table too large");
  // Elements: 0 plus triples (i, g, j) with i,j in {0..n-1}, g in Z_m.
  auto id_of = [&](int i, int g, int j) { return 1 + (i * m + g) * n + j; };
  int total = n * n * m + 1;
  std::vector<int> table(total * total, 0);
  std::vector<std::string> names(total);
  names[0] = "0";
  for (int i = 0; i < n; ++i) {
    for (int g = 0; g < m; ++g) {
      for (int j = 0; j < n; ++j) {
        names[id_of(i, g, j)] = "(" + std::to_string(i + 1) + "," +
                                std::to_string(g) + "," + std::to_string(j + 1) +
                                ")";
        for (int k = 0; k < n; ++k) {
          for (int h = 0; h < m; ++h) {
            for (int l = 0; l < n; ++l) {
              if (j == k) {
                table[id_of(i, g, j) * total + id_of(k, h, l)] =
                    id_of(i, (g + h) % m, l);
              }
            }
          }
        }
      }
    }
  }
  return InverseSemigroup::validate(total, std::move(table), std::move(names));
}

}  // namespace

InverseSemigroup build(const std::string& id) {
  auto parts = split(id, ':');
  const std::string& family = parts[0];
  if (family == "sym_inv" && parts.size() == 2) {
    return build_sym_inv(parse_int(parts[1]));
  }
  if (family == "chain" && parts.size() == 2) {
    return build_chain(parse_int(parts[1]));
  }
  if (family == "antichain" && parts.size() == 2) {
    return build_antichain(parse_int(parts[1]));
  }
  if (family == "powerset" && parts.size() == 2) {
    return build_powerset(parse_int(parts[1]));
  }
  if (family == "group0" && parts.size() >= 2) {
    if (parts[1] == "cyclic" && parts.size() == 3) {
      return build_cyclic0(parse_int(parts[2]));
    }
    if (parts[1] == "sym" && parts.size() == 3 && parts[2] == "3") {
      return build_sym3_0();
    }
  }
  if (family == "brandt" && parts.size() == 4 && parts[1] == "cyclic") {
    return build_brandt_cyclic(parse_int(parts[2]), parse_int(parts[3]));
  }
  throw Error("Unsupported", "unknown catalog id: " + id);
}

std::vector<std::string> members() {
  return {
      "chain:1",        "chain:2",        "chain:3",        "chain:4",
      "sym_inv:1",      "sym_inv:2",      "sym_inv:3",      "antichain:2",
      "antichain:3",    "powerset:1",     "powerset:2",     "powerset:3",
      "group0:cyclic:2", "group0:cyclic:3", "group0:cyclic:4", "group0:sym:3",
      "brandt:cyclic:1:2", "brandt:cyclic:2:2",
  };
}

InverseSemigroup parse_text(const std::string& text) {
  std::vector<int> values;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int v;
    while (ls >> v) values.push_back(v);
    std::string junk;
    if (ls.clear(), ls >> junk, !junk.empty()) {
      throw Error("Malformed", "non-integer token in table: " + junk);
    }
  }
  if (values.empty()) throw Error("Malformed", "empty table file");
  int n = values[0];
  if (n < 1 || static_cast<int>(values.size()) != 1 + n * n) {
    throw Error("Malformed", "expected n followed by n*n entries");
  }
  return InverseSemigroup::validate(
      n, std::vector<int>(values.begin() + 1, values.end()));
}

std::string serialize_text(const InverseSemigroup& S) {
  std::ostringstream out;
  int n = S.size();
  out << "# " << n << "x" << n << " inverse semigroup table; element 0 is the zero\n";
  out << n << "\n";
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (t) out << " ";
      out << S.product(s, t);
    }
    out << "\n";
  }
  return out.str();
}

InverseSemigroup parse_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("Malformed", e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("table")) {
    throw Error("Malformed", "expected an object with 'n' and 'table'");
  }
  int n = j["n"].get<int>();
  if (n < 1) throw Error("Malformed", "n must be at least 1");
  std::vector<int> table;
  table.reserve(n * n);
  for (const auto& row : j["table"]) {
    for (const auto& v : row) table.push_back(v.get<int>());
  }
  std::vector<std::string> names;
  if (j.contains("names")) {
    names = j["names"].get<std::vector<std::string>>();
  }
  return InverseSemigroup::validate(n, std::move(table), std::move(names));
}

std::string serialize_json(const InverseSemigroup& S) {
  json j;
  int n = S.size();
  j["n"] = n;
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) rows[s][t] = S.product(s, t);
  }
  j["table"] = rows;
  j["names"] = S.names();
  return j.dump(2);
}

InverseSemigroup load(const std::string& path_or_id) {
  auto ends_with = [&](const std::string& suf) {
    return path_or_id.size() >= suf.size() &&
           path_or_id.compare(path_or_id.size() - suf.size(), suf.size(), suf) == 0;
  };
  if (ends_with(".ist") || ends_with(".json")) {
    std::ifstream in(path_or_id);
    if (!in) throw Error("Malformed", "cannot open file: " + path_or_id);
    std::ostringstream buf;
    buf << in.rdbuf();
    return ends_with(".ist") ? parse_text(buf.str()) : parse_json(buf.str());
  }
  return build(path_or_id);
}

}  // namespace catalog
}  // namespace istone
