// Copyright 2026 The namedis Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "namedis/synthetic.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "namedis/errors.h"

namespace namedis {
namespace {

constexpr const char* kCollisionSurnames[] = {
    "wang", "li",   "zhang", "liu",  "chen", "yang", "huang", "zhao",
    "wu",   "zhou", "kim",   "lee",  "park", "xu",   "sun",   "ma",
    "zhu",  "hu",   "guo",   "he",   "lin",  "gao",  "luo",   "zheng"};

// Concentrated on a handful of initials.
constexpr const char* kCollisionGiven[] = {
    "wei",  "wen",  "jun",  "jian", "jing", "jie",  "xin", "xiao",
    "xue",  "yan",  "ying", "yu",   "yong", "hui",  "hong", "hao",
    "ming", "min",  "jin",  "yi",   "xiang", "wu",  "jia", "yun"};

constexpr const char* kWesternGiven[] = {
    "aaron",  "adam",    "adrian",  "alan",    "albert",  "alex",
    "alice",  "allen",   "amanda",  "amy",     "andrea",  "andrew",
    "angela", "anna",    "anthony", "barbara", "benjamin", "bernard",
    "beth",   "brian",   "bruce",   "carl",    "carlos",  "carol",
    "catherine", "charles", "chris", "claire",  "craig",   "daniel",
    "david",  "deborah", "dennis",  "diana",   "donald",  "dorothy",
    "douglas", "edward", "elena",   "elizabeth", "emily", "eric",
    "eva",    "fernando", "frank",  "gabriel", "gary",    "george",
    "gerald", "grace",   "gregory", "hannah",  "harold",  "helen",
    "henry",  "howard",  "irene",   "isaac",   "ivan",    "jack",
    "jacob",  "james",   "jane",    "janet",   "jason",   "jean",
    "jeffrey", "jennifer", "jerome", "jessica", "joan",   "john",
    "jonathan", "joseph", "joshua", "julia",   "karen",   "keith",
    "kenneth", "kevin",  "laura",   "lawrence", "linda",  "lisa",
    "louis",  "lucas",   "margaret", "maria",  "mark",    "martin",
    "mary",   "matthew", "michael", "monica",  "nancy",   "nathan",
    "nicholas", "olga",  "oliver",  "oscar",   "patricia", "patrick",
    "paul",   "peter",   "philip",  "rachel",  "ralph",   "raymond",
    "rebecca", "richard", "robert", "roger",   "ronald",  "rosa",
    "ruth",   "samuel",  "sandra",  "sarah",   "scott",   "sharon",
    "simon",  "sophie",  "stephen", "steven",  "susan",   "thomas",
    "timothy", "ursula", "victor",  "vincent", "walter",  "william",
    "yolanda", "zachary"};

constexpr const char* kOnsets[] = {
    "b", "br", "c", "ch", "d", "dr", "f", "g", "gr", "h", "k", "l",
    "m", "n", "p", "r", "s", "st", "t", "v", "w"};
constexpr const char* kNuclei[] = {
    "a", "e", "i", "o", "u", "ai", "ea", "ou", "ar", "er", "or", "al", "el"};
constexpr const char* kCodas[] = {
    "ton", "son", "man", "ley", "ford", "wick", "ham", "hart", "wood", "stein",
    "berg", "ner", "ker", "ard", "well", "field", "more", "land", "by", "ridge",
    "mond", "ling", "dale", "worth"};

constexpr const char* kFields[] = {
    "physics", "chemistry", "biology", "mathematics", "informatics",
    "medicine", "engineering", "psychology", "economics", "geology",
    "astronomy", "linguistics"};
constexpr const char* kCities[] = {
    "springfield", "boston", "toronto", "leiden", "munich", "lyon", "kyoto",
    "seoul", "shanghai", "madrid", "austin", "oxford", "zurich", "sydney"};
constexpr const char* kDomains[] = {
    "univ.edu", "mail.org", "inst.ac", "lab.net", "research.io"};
constexpr const char* kVenues[] = {
    "journal of applied results", "letters in methods", "review of systems",
    "annals of measurement", "transactions on data"};

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [0, 1) from the top 53 bits; identical on every platform.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  std::size_t below(std::size_t n) {
    return std::min(n - 1, static_cast<std::size_t>(uniform() * static_cast<double>(n)));
  }
  bool chance(double p) { return uniform() < p; }
  // Failures before the first success.
  std::size_t geometric(double p) {
    if (p >= 1.0) return 0;
    const double u = 1.0 - uniform();  // (0, 1]
    return static_cast<std::size_t>(std::floor(std::log(u) / std::log1p(-p)));
  }
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

// Samples indices 0..n-1 with probability proportional to `weights`.
class Sampler {
 public:
  explicit Sampler(const std::vector<double>& weights) : cdf_(weights.size()) {
    double total = 0.0;
    for (std::size_t i = 0; i < weights.size(); ++i) cdf_[i] = total += weights[i];
  }
  std::size_t operator()(Rng& rng) const {
    const double x = rng.uniform() * cdf_.back();
    const auto it = std::upper_bound(cdf_.begin(), cdf_.end(), x);
    return std::min<std::size_t>(cdf_.size() - 1, it - cdf_.begin());
  }

 private:
  std::vector<double> cdf_;
};

Sampler zipf(std::size_t n, double exponent) {
  std::vector<double> w(n);
  for (std::size_t r = 0; r < n; ++r) w[r] = std::pow(static_cast<double>(r + 1), -exponent);
  return Sampler(w);
}

struct Author {
  std::string surname;
  std::string first;
  std::string middle;  // empty when none
  std::string email_local;
  std::string email_domain;
  std::size_t group = 0;
  bool collision = false;
};

std::string capitalize(std::string s) {
  if (!s.empty()) s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

std::vector<std::string> surname_pool(std::size_t size, Rng& rng,
                                      const std::set<std::string>& excluded) {
  std::vector<std::string> all;
  for (const char* o : kOnsets) {
    for (const char* n : kNuclei) {
      for (const char* c : kCodas) {
        std::string s = std::string(o) + n + c;
        if (!excluded.contains(s)) all.push_back(std::move(s));
      }
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  rng.shuffle(all);
  if (size < all.size()) all.resize(size);
  return all;
}

// Each group gets a lab named by a pseudo-word, so affiliation words stay
// distinctive after the corpus-wide stoplist removes the common ones.
std::string institution(std::size_t group, Rng& rng) {
  const std::string lab = std::string(kOnsets[rng.below(std::size(kOnsets))]) +
                          kNuclei[rng.below(std::size(kNuclei))] +
                          kCodas[rng.below(std::size(kCodas))];
  const std::string field = kFields[rng.below(std::size(kFields))];
  const std::string city = kCities[rng.below(std::size(kCities))];
  const std::size_t zip = 10000 + rng.below(90000);
  return capitalize(lab) + " Laboratory of " + capitalize(field) + ", " +
         capitalize(city) + " Institute " + std::to_string(group % 97 + 1) +
         ", " + capitalize(city) + " " + std::to_string(zip);
}

}  // namespace

void SyntheticSpec::validate() const {
  auto probability = [](double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw DataError(std::string(name) + " must be in [0, 1]");
    }
  };
  probability(collision_pool_share, "collision_pool_share");
  probability(full_given_name_probability, "full_given_name_probability");
  probability(email_coverage, "email_coverage");
  probability(affiliation_coverage, "affiliation_coverage");
  probability(two_token_given_probability, "two_token_given_probability");
  probability(middle_name_omission_probability, "middle_name_omission_probability");
  probability(cross_group_probability, "cross_group_probability");
  if (n_authors < 1) throw DataError("n_authors must be at least 1");
  if (n_papers < 1) throw DataError("n_papers must be at least 1");
  if (max_team < 2) throw DataError("max_team must be at least 2");
  if (min_team < 2 || min_team > max_team) {
    throw DataError("min_team must be in [2, max_team]");
  }
  if (min_team > n_authors) throw DataError("n_authors is smaller than min_team");
  if (!(team_size_mean >= 2.0) || !std::isfinite(team_size_mean)) {
    throw DataError("team_size_mean must be at least 2");
  }
  if (surname_pool_size < 1) throw DataError("surname_pool_size must be at least 1");
  if (!(surname_zipf_exponent >= 0.0) || !std::isfinite(surname_zipf_exponent)) {
    throw DataError("surname_zipf_exponent must be non-negative");
  }
  if (collision_surname_count < 1 ||
      collision_surname_count > std::size(kCollisionSurnames)) {
    throw DataError("collision_surname_count must be in [1, " +
                    std::to_string(std::size(kCollisionSurnames)) + "]");
  }
  if (!(group_size_mean >= 1.0) || !std::isfinite(group_size_mean)) {
    throw DataError("group_size_mean must be at least 1");
  }
}

SyntheticCorpus generate_synthetic(const SyntheticSpec& spec) {
  spec.validate();
  Rng rng(spec.seed);

  const std::vector<std::string> collision(
      kCollisionSurnames, kCollisionSurnames + spec.collision_surname_count);
  const std::set<std::string> collision_set(collision.begin(), collision.end());
  const auto western = surname_pool(spec.surname_pool_size, rng, collision_set);
  const Sampler western_surname = zipf(western.size(), spec.surname_zipf_exponent);
  const Sampler collision_surname = zipf(collision.size(), 0.5);
  const Sampler collision_given = zipf(std::size(kCollisionGiven), 0.8);
  const Sampler western_given = zipf(std::size(kWesternGiven), 0.6);

  // Groups of geometric size with the requested mean.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<Author> authors(spec.n_authors);
  {
    std::size_t i = 0;
    while (i < spec.n_authors) {
      const std::size_t size =
          1 + rng.geometric(1.0 / spec.group_size_mean);
      std::vector<std::size_t> members;
      for (std::size_t k = 0; k < size && i < spec.n_authors; ++k, ++i) {
        members.push_back(i);
        authors[i].group = groups.size();
      }
      groups.push_back(std::move(members));
    }
  }
  std::vector<std::string> affiliations;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    affiliations.push_back(institution(g, rng));
  }

  for (std::size_t i = 0; i < spec.n_authors; ++i) {
    Author& a = authors[i];
    a.collision = rng.chance(spec.collision_pool_share);
    if (a.collision) {
      a.surname = collision[collision_surname(rng)];
      a.first = kCollisionGiven[collision_given(rng)];
      if (rng.chance(spec.two_token_given_probability)) {
        a.middle = kCollisionGiven[collision_given(rng)];
      }
    } else {
      a.surname = western[western_surname(rng)];
      a.first = kWesternGiven[western_given(rng)];
      if (rng.chance(spec.two_token_given_probability)) {
        a.middle = kWesternGiven[western_given(rng)];
      }
    }
    a.email_local = a.first.substr(0, 1) + a.surname + std::to_string(i);
    a.email_domain = kDomains[rng.below(std::size(kDomains))];
  }

  // Heavy-tailed activity: Pareto weights with shape 1.5.
  std::vector<double> activity(spec.n_authors);
  for (auto& w : activity) w = std::pow(1.0 - rng.uniform(), -1.0 / 1.5);
  const Sampler lead_sampler(activity);

  const std::size_t max_team = std::min(spec.max_team, spec.n_authors);
  const double team_p = 1.0 / (spec.team_size_mean - 1.0);

  std::vector<PaperRecord> papers;
  papers.reserve(spec.n_papers);
  Clustering::Assignment truth;
  const int width = static_cast<int>(std::to_string(spec.n_papers).size());
  for (std::size_t p = 0; p < spec.n_papers; ++p) {
    std::size_t team = 0;
    for (int attempt = 0; attempt < 64; ++attempt) {
      team = 2 + rng.geometric(team_p);
      if (team >= spec.min_team && team <= max_team) break;
    }
    team = std::clamp(team, spec.min_team, max_team);

    std::vector<std::size_t> members;
    std::set<std::size_t> seen;
    const std::size_t lead = lead_sampler(rng);
    members.push_back(lead);
    seen.insert(lead);
    const auto& home = groups[authors[lead].group];
    while (members.size() < team) {
      std::size_t pick = 0;
      bool found = false;
      for (int attempt = 0; attempt < 16 && !found; ++attempt) {
        pick = rng.chance(spec.cross_group_probability) || seen.size() >= home.size()
                   ? lead_sampler(rng)
                   : home[rng.below(home.size())];
        found = !seen.contains(pick);
      }
      if (!found) {
        pick = rng.below(spec.n_authors);
        while (seen.contains(pick)) pick = (pick + 1) % spec.n_authors;
      }
      members.push_back(pick);
      seen.insert(pick);
    }

    PaperRecord paper;
    std::string pid = std::to_string(p);
    paper.paper_id = "P" + std::string(width - pid.size(), '0') + pid;
    paper.year = 2000 + static_cast<int>(rng.below(20));
    paper.venue = kVenues[rng.below(std::size(kVenues))];
    for (std::size_t pos = 0; pos < members.size(); ++pos) {
      const Author& a = authors[members[pos]];
      AuthorMention m;
      m.surname_raw = capitalize(a.surname);
      const bool keep_middle =
          !a.middle.empty() && !rng.chance(spec.middle_name_omission_probability);
      m.given_raw = std::string(1, static_cast<char>(a.first[0] - 'a' + 'A')) + ".";
      if (keep_middle) {
        m.given_raw += " ";
        m.given_raw += static_cast<char>(a.middle[0] - 'a' + 'A');
        m.given_raw += ".";
      }
      if (rng.chance(spec.full_given_name_probability)) {
        m.given_full_raw = capitalize(a.first);
        if (keep_middle) *m.given_full_raw += " " + capitalize(a.middle);
      }
      if (rng.chance(spec.affiliation_coverage)) {
        m.affiliations.push_back(affiliations[a.group]);
      }
      if (rng.chance(spec.email_coverage)) {
        m.email = a.email_local + "@" + a.email_domain;
      }
      truth.emplace(paper.paper_id + ":" + std::to_string(pos),
                    "a" + std::to_string(members[pos]));
      paper.authors.push_back(std::move(m));
    }
    papers.push_back(std::move(paper));
  }

  SyntheticCorpus out{Corpus(std::move(papers)), Clustering(std::move(truth)), {}};
  for (const auto& s : collision) out.origins.add(s);
  return out;
}

}  // namespace namedis
