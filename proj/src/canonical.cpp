#include "signedfam/canonical.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <numeric>

#include "signedfam/constructions.hpp"
#include "signedfam/family_io.hpp"
#include "signedfam/search.hpp"

namespace signedfam {

Family apply_map(const WreathMap& map, const Family& fam) {
  const Params& p = fam.params();
  if (map.n() != p.n() || map.k() != p.k())
    throw ParameterError("map acts on [" + std::to_string(map.n()) + "]x[" + std::to_string(map.k()) +
                         "] but the family lives over " + p.to_string());
  std::vector<SignedSet> image;
  image.reserve(fam.size());
  for (const auto& m : fam.members()) image.push_back(SignedSet::from_mask(map.apply_mask(m.mask())));
  return Family(p, std::move(image));
}

namespace {

std::string sha256_hex(const std::string& data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr);
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 0xf]);
  }
  return out;
}

constexpr std::uint64_t low_bytes(int j) {
  return j >= 8 ? ~std::uint64_t{0} : (std::uint64_t{1} << (8 * j)) - 1;
}

// One partial labeling: new columns 1..placed occupy bytes 0..placed-1; the
// unplaced source columns follow in their original order.
struct State {
  std::vector<std::uint64_t> members; // sorted
  std::vector<int> remaining;         // source columns (1-based) of bytes placed..n-1
  std::vector<int> placed_src;        // source column of each new column
  std::vector<int> perm_of_src;       // index into the permutation list, per source column
};

struct Choice {
  std::size_t state;
  std::size_t position; // index into remaining
  std::size_t perm;
};

class Canonicalizer {
public:
  Canonicalizer(const Family& fam) : params_(fam.params()), n_(fam.params().n()), k_(fam.params().k()) {
    std::vector<int> perm(static_cast<std::size_t>(k_));
    std::iota(perm.begin(), perm.end(), 0);
    do {
      std::array<std::uint8_t, 256> table{};
      for (int b = 0; b < 256; ++b) {
        std::uint8_t img = 0;
        for (int y = 0; y < k_; ++y)
          if (b & (1 << y)) img |= static_cast<std::uint8_t>(1u << perm[static_cast<std::size_t>(y)]);
        table[static_cast<std::size_t>(b)] = img;
      }
      perms_.push_back(perm);
      tables_.push_back(table);
    } while (std::next_permutation(perm.begin(), perm.end()));

    State start;
    start.members = fam.masks();
    std::sort(start.members.begin(), start.members.end());
    start.remaining.resize(static_cast<std::size_t>(n_));
    std::iota(start.remaining.begin(), start.remaining.end(), 1);
    start.perm_of_src.assign(static_cast<std::size_t>(n_), 0);
    states_.push_back(std::move(start));
  }

  CanonicalForm run() {
    for (int j = 0; j < n_; ++j) place(j);
    const State& best = states_.front();
    std::vector<int> cols(static_cast<std::size_t>(n_));
    std::vector<std::vector<int>> signs(static_cast<std::size_t>(n_));
    for (int pos = 0; pos < n_; ++pos) {
      const int src = best.placed_src[static_cast<std::size_t>(pos)];
      cols[static_cast<std::size_t>(src - 1)] = pos + 1;
    }
    for (int src = 1; src <= n_; ++src) {
      const auto& perm = perms_[static_cast<std::size_t>(best.perm_of_src[static_cast<std::size_t>(src - 1)])];
      auto& s = signs[static_cast<std::size_t>(src - 1)];
      for (int y = 0; y < k_; ++y) s.push_back(perm[static_cast<std::size_t>(y)] + 1);
    }
    WreathMap map(std::move(cols), std::move(signs));
    std::vector<SignedSet> image;
    image.reserve(best.members.size());
    for (auto m : best.members) image.push_back(SignedSet::from_mask(m));
    std::string bytes = canonical_json(Family(params_, std::move(image)));
    std::string digest = sha256_hex(bytes);
    return {std::move(bytes), std::move(digest), std::move(map)};
  }

private:
  std::uint64_t child_mask(std::uint64_t m, int j, std::size_t q, std::size_t perm) const {
    const int src_byte = j + static_cast<int>(q);
    const auto b = static_cast<std::uint8_t>(m >> (8 * src_byte));
    const std::uint64_t low = m & low_bytes(j);
    const std::uint64_t mid = m & low_bytes(src_byte) & ~low_bytes(j);
    const std::uint64_t high = m & ~low_bytes(src_byte + 1);
    return low | (static_cast<std::uint64_t>(tables_[perm][b]) << (8 * j)) | (mid << 8) | high;
  }

  void place(int j) {
    const std::uint64_t keep = low_bytes(j + 1);
    std::vector<std::uint64_t> best_code, code;
    std::vector<Choice> best_choices;
    for (std::size_t s = 0; s < states_.size(); ++s) {
      const State& st = states_[s];
      for (std::size_t q = 0; q < st.remaining.size(); ++q) {
        for (std::size_t perm = 0; perm < perms_.size(); ++perm) {
          code.clear();
          for (auto m : st.members) code.push_back(child_mask(m, j, q, perm) & keep);
          std::sort(code.begin(), code.end());
          if (best_choices.empty() || code < best_code) {
            best_code.swap(code);
            best_choices.assign(1, {s, q, perm});
          } else if (code == best_code) {
            best_choices.push_back({s, q, perm});
          }
        }
      }
    }
    std::map<std::vector<std::uint64_t>, State> next;
    for (const auto& c : best_choices) {
      const State& st = states_[c.state];
      State child;
      child.members.reserve(st.members.size());
      for (auto m : st.members) child.members.push_back(child_mask(m, j, c.position, c.perm));
      std::sort(child.members.begin(), child.members.end());
      if (next.count(child.members)) continue;
      const int src = st.remaining[c.position];
      child.remaining = st.remaining;
      child.remaining.erase(child.remaining.begin() + static_cast<std::ptrdiff_t>(c.position));
      child.placed_src = st.placed_src;
      child.placed_src.push_back(src);
      child.perm_of_src = st.perm_of_src;
      child.perm_of_src[static_cast<std::size_t>(src - 1)] = static_cast<int>(c.perm);
      auto key = child.members;
      next.emplace(std::move(key), std::move(child));
    }
    states_.clear();
    for (auto& [key, st] : next) states_.push_back(std::move(st));
  }

  Params params_;
  int n_, k_;
  std::vector<std::vector<int>> perms_;
  std::vector<std::array<std::uint8_t, 256>> tables_;
  std::vector<State> states_;
};

} // namespace

CanonicalForm canonical_form(const Family& fam, const CanonicalLimits& limits) {
  const Params& p = fam.params();
  if (p.n() > limits.max_n || p.k() > limits.max_k || fam.size() > limits.max_members)
    throw CapacityError("canonical form limited to n <= " + std::to_string(limits.max_n) + ", k <= " +
                        std::to_string(limits.max_k) + ", " + std::to_string(limits.max_members) +
                        " members; got " + p.to_string() + " with " + std::to_string(fam.size()) + " members");
  return Canonicalizer(fam).run();
}

IsomorphismResult are_isomorphic(const Family& a, const Family& b, const CanonicalLimits& limits) {
  if (a.params() != b.params())
    throw ParameterError("families live over " + a.params().to_string() + " and " + b.params().to_string());
  if (a.size() != b.size()) return {};
  auto ca = canonical_form(a, limits);
  auto cb = canonical_form(b, limits);
  if (ca.bytes != cb.bytes) return {};
  return {true, cb.map.inverse().after(ca.map)};
}

std::string ClassificationResult::label() const {
  switch (kind) {
  case Kind::h1: return "H1(ell=" + std::to_string(parameter) + ")";
  case Kind::h2: return "H2(c=" + std::to_string(parameter) + ")";
  case Kind::star: return "STAR";
  case Kind::other: return "OTHER";
  }
  return "OTHER";
}

Classifier::Classifier(Params params, CanonicalLimits limits) : params_(params), limits_(limits) {
  const int n = params.n(), r = params.r(), t = params.t();
  if (r >= t + 1)
    for (int ell = t + 2; ell <= params.p(); ++ell) {
      Family f = build_h1(params, ell);
      candidates_.push_back({Kind::h1, ell, f.size(), std::nullopt, std::move(f)});
    }
  if (r >= t + 2 && n >= r + 2)
    for (int c = r + 2; c <= std::min(2 * r - t, n); ++c) {
      Family f = build_h2(params, c);
      candidates_.push_back({Kind::h2, c, f.size(), std::nullopt, std::move(f)});
    }
}

ClassificationResult Classifier::classify(const Family& fam) {
  if (fam.params() != params_) throw ParameterError("classifier built for " + params_.to_string());
  if (fam.empty() || !is_t_intersecting(fam)) throw ContractError("classification needs a t-intersecting family");
  if (!is_maximal(fam).maximal) throw ContractError("classification needs a maximal family");
  return classify_trusted(fam);
}

ClassificationResult Classifier::classify_trusted(const Family& fam) {
  ClassificationResult out;
  out.diagnostics = covering_number(fam);
  if (auto triv = is_trivial(fam); triv.trivial) {
    out.kind = Kind::star;
    out.witness = normalize_to_prefix(*triv.witness, params_);
    return out;
  }
  std::optional<CanonicalForm> mine;
  for (auto& cand : candidates_) {
    if (cand.size != fam.size()) continue;
    if (!mine) mine = canonical_form(fam, limits_);
    if (!cand.form) cand.form = canonical_form(cand.family, limits_);
    if (cand.form->bytes != mine->bytes) continue;
    out.kind = cand.kind;
    out.parameter = cand.parameter;
    out.witness = cand.form->map.inverse().after(mine->map);
    return out;
  }
  return out;
}

ClassificationResult classify(const Family& fam, const CanonicalLimits& limits) {
  return Classifier(fam.params(), limits).classify(fam);
}

} // namespace signedfam
