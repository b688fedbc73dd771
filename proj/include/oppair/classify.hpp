#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oppair/config.hpp"
#include "oppair/geometry.hpp"

namespace oppair::classify {

struct RejectionCounts {
  std::size_t non_tree = 0;
  std::size_t adjunction = 0;
  std::size_t parity_lemma = 0;
  std::size_t hodge_lemma = 0;
  std::size_t non_unimodular = 0;
  std::size_t wrong_signature = 0;
  std::size_t no_blowdown = 0;
};

struct EnumerationOptions {
  bool prune = true;  // apply the parity and Hodge-index lemmas while generating
};

struct EnumerationResult {
  KodairaType y_type;
  std::vector<Configuration> configurations;  // sorted by canonical key
  RejectionCounts rejected;
  std::size_t candidates = 0;  // distinct 10-component trees examined
};

// Number of additional components a type needs to reach 10 components.
std::size_t additional_count(KodairaTag tag);

EnumerationResult enumerate_completions(KodairaTag tag, EnumerationOptions options = {});

// f1 and f2 meet only f3. True iff both self-intersections are even, which
// forces det I_F to be even.
bool parity_obstruction(const Configuration& c, const std::string& f1, const std::string& f2,
                        const std::string& f3);
// Scans every pair of components meeting only a common third one.
bool has_parity_obstruction(const Configuration& c);

// At least two additional components meet components of multiplicity >= 2.
bool hodge_exclusion(const Configuration& c);

// Determinants of I_F over every way of attaching one additional component
// to the D~8 fibre (with self-intersection fixed by adjunction).
std::vector<lattice::Integer> d8_attachment_determinants();

enum class Terminal { P2, F0, F2 };
std::string terminal_name(Terminal t);  // "P2, 3h", "F0, 2s0+2f", "F2, 2s_inf"
geometry::ModelSpec terminal_model(Terminal t);
std::optional<Terminal> match_terminal(const Configuration& c);

struct BlowdownPath {
  std::vector<geometry::BirationalStep> steps;
  Terminal terminal = Terminal::P2;
  std::size_t contractions() const;
  std::size_t blowups() const;
};

struct SearchOptions {
  int max_blowups = 2;  // extra blowups allowed when no pure contraction sequence exists
};

class PathSearcher {
 public:
  explicit PathSearcher(SearchOptions options = {});
  ~PathSearcher();
  PathSearcher(const PathSearcher&) = delete;
  PathSearcher& operator=(const PathSearcher&) = delete;

  std::optional<BlowdownPath> find(const Configuration& c);

 private:
  struct Impl;
  Impl* impl_;
};

std::optional<BlowdownPath> find_blowdown_path(const Configuration& c, SearchOptions options = {});

// Replays the steps from c and reports the configuration reached.
Configuration replay_path(const Configuration& c, const BlowdownPath& path);

struct GoldenEntry {
  std::string label;
  std::string comment;
  Configuration config;
};

using GoldenList = std::map<KodairaTag, std::vector<GoldenEntry>>;

// The bundled list compiled into the library.
const GoldenList& golden_list();
// Same format, read from <dir>/<type>.json for the seven admissible types.
GoldenList load_golden_dir(const std::filesystem::path& dir);
std::vector<GoldenEntry> parse_golden_file(const std::string& text, KodairaTag expected);

}  // namespace oppair::classify
