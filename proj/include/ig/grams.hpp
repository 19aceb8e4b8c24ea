#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ig/bitvec.hpp"
#include "ig/bytes.hpp"
#include "ig/rng.hpp"

namespace ig::grams {

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

using Genome = std::string;

inline constexpr char kPad = '#'; // extension symbol, outside the alphabet
inline const std::string kAlphabet = "ACGT";

// seeded 64-bit FNV-1a; the single Bloom hash (k = 1)
uint64_t fnv1a(const char* data, size_t len, uint64_t seed);

// Eq-style Bloom sizing: l = ceil(-1 / ((1 - p^{1/k})^{1/(k n)} - 1))
long required_length(double p, int k, long n);
double fp_rate(long l, int k, long n);

// dictionary of frequent grams, keyed by 64-bit gram hash.  Grams of length
// in [qmin, qmax] that occur at least freq_threshold times in the training
// corpus are kept; the set is prefix-closed by monotonicity of frequency.
struct GramDictionary {
    int qmin = 4;
    int qmax = 8;
    int freq_threshold = 1;
    std::unordered_map<uint64_t, int32_t> freq;

    int32_t frequency(const std::string& gram) const;
    bool frequent(uint64_t gram_hash) const { return freq.count(gram_hash) != 0; }
    uint64_t digest() const; // order-independent content hash
};

GramDictionary train_dictionary(std::span<const Genome> corpus, int qmin, int qmax,
                                int freq_threshold);

// variable-length gram set of a genome: the string is padded on both sides
// with qmax-1 copies of '#', and at every start position the longest gram
// still frequent in the dictionary is emitted (qmin-gram if none is)
std::vector<std::string> generate_grams(const Genome& s, const GramDictionary& dict);

// gram hashes straight to filter positions, skipping string materialization
std::vector<uint64_t> gram_hashes(const Genome& s, const GramDictionary& dict,
                                  uint64_t hash_seed);

struct BloomFilter {
    uint32_t l = 0;
    uint64_t hash_seed = 0;
    BitVec bits;

    size_t weight() const { return bits.popcount(); }
    bool test_hash(uint64_t gram_hash) const { return bits.get(gram_hash % l); }

    Bytes serialize() const;
    static BloomFilter parse(ByteReader& r);
    bool operator==(const BloomFilter& o) const = default;
};

BloomFilter build_filter(std::span<const uint64_t> gram_hashes, long l,
                         uint64_t hash_seed);
BloomFilter build_filter(const Genome& s, const GramDictionary& dict, long l,
                         uint64_t hash_seed);

long hamming(const BloomFilter& a, const BloomFilter& b);

// ---- genome I/O and synthesis ----------------------------------------------

// plain text or FASTA; '>' header lines skipped, whitespace stripped,
// lowercase normalized to uppercase
Genome parse_genome_text(const std::string& text);
Genome load_genome_file(const std::string& path);

struct SynthProfile {
    size_t length = 16569;
    // tandem-repeat content: with probability repeat_rate (per emitted run)
    // a periodic run is appended instead of random characters
    double repeat_rate = 0.12;
    int repeat_period_min = 1;
    int repeat_period_max = 6;
    int repeat_len_min = 40;
    int repeat_len_max = 160;
};

Genome synth_genome(const SynthProfile& prof, Rng& rng);

// substitution at count random positions (always to a different character)
Genome mutate_substitutions(const Genome& g, size_t count, Rng& rng);
// mixed substitutions/insertions/deletions, for edit-distance fidelity tests
Genome mutate_edits(const Genome& g, size_t count, Rng& rng);
// u substitutions starting at a random position, spaced gap apart
Genome mutate_spaced(const Genome& g, size_t u, size_t gap, Rng& rng);

// quadratic DP edit distance; test oracle and attack score mode
size_t edit_distance(const Genome& a, const Genome& b);

} // namespace ig::grams
