#include "ig/grams.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

namespace ig::grams {

namespace {
constexpr uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr uint64_t kFnvPrime = 1099511628211ULL;
} // namespace

uint64_t fnv1a(const char* data, size_t len, uint64_t seed) {
    uint64_t h = kFnvOffset ^ seed;
    for (size_t i = 0; i < len; ++i) {
        h ^= uint8_t(data[i]);
        h *= kFnvPrime;
    }
    return h;
}

long required_length(double p, int k, long n) {
    if (!(p > 0.0 && p < 1.0)) throw InputError("false-positive rate must be in (0,1)");
    if (k < 1 || n < 1) throw InputError("k and n must be positive");
    long double inner = 1.0L - powl((long double)p, 1.0L / k);
    long double root = powl(inner, 1.0L / ((long double)k * (long double)n));
    long double l = -1.0L / (root - 1.0L);
    return (long)ceill(l);
}

double fp_rate(long l, int k, long n) {
    if (l < 1) throw InputError("filter length must be positive");
    long double zero = powl(1.0L - 1.0L / (long double)l, (long double)k * (long double)n);
    return (double)powl(1.0L - zero, (long double)k);
}

int32_t GramDictionary::frequency(const std::string& gram) const {
    auto it = freq.find(fnv1a(gram.data(), gram.size(), 0));
    return it == freq.end() ? 0 : it->second;
}

uint64_t GramDictionary::digest() const {
    // order-independent: sum of per-entry mixes
    uint64_t acc = 0x6a09e667f3bcc908ULL ^ (uint64_t(qmin) << 32) ^
                   (uint64_t(qmax) << 16) ^ uint64_t(freq_threshold);
    for (const auto& [h, c] : freq) {
        uint64_t st = h ^ (uint64_t(uint32_t(c)) * 0x9e3779b97f4a7c15ULL);
        acc += splitmix64(st);
    }
    return acc;
}

GramDictionary train_dictionary(std::span<const Genome> corpus, int qmin, int qmax,
                                int freq_threshold) {
    if (corpus.empty()) throw InputError("training corpus is empty");
    if (qmin < 1 || qmax < qmin) throw InputError("bad gram length bounds");
    if (freq_threshold < 1) throw InputError("frequency threshold must be >= 1");

    GramDictionary dict;
    dict.qmin = qmin;
    dict.qmax = qmax;
    dict.freq_threshold = freq_threshold;

    std::vector<std::string> padded;
    padded.reserve(corpus.size());
    std::string pad(size_t(qmax - 1), kPad);
    for (const auto& g : corpus) padded.push_back(pad + g + pad);

    // level-wise counting: a length-q gram can only reach the threshold if
    // its length-(q-1) prefix did, so each level is filtered by the previous
    std::unordered_map<uint64_t, int32_t> prev;
    for (int q = qmin; q <= qmax; ++q) {
        std::unordered_map<uint64_t, int32_t> cur;
        for (const auto& s : padded) {
            if (s.size() < size_t(q)) continue;
            for (size_t i = 0; i + q <= s.size(); ++i) {
                if (q > qmin) {
                    uint64_t ph = fnv1a(s.data() + i, size_t(q - 1), 0);
                    if (prev.find(ph) == prev.end()) continue;
                }
                ++cur[fnv1a(s.data() + i, size_t(q), 0)];
            }
        }
        for (auto it = cur.begin(); it != cur.end();) {
            if (it->second < freq_threshold)
                it = cur.erase(it);
            else
                ++it;
        }
        dict.freq.insert(cur.begin(), cur.end());
        prev = std::move(cur);
        if (prev.empty()) break;
    }
    return dict;
}

std::vector<uint64_t> gram_hashes(const Genome& s, const GramDictionary& dict,
                                  uint64_t hash_seed) {
    if (s.empty()) throw InputError("empty genome");
    const int qmin = dict.qmin, qmax = dict.qmax;
    std::string ext;
    ext.reserve(s.size() + 2 * size_t(qmax - 1));
    ext.append(size_t(qmax - 1), kPad);
    ext += s;
    ext.append(size_t(qmax - 1), kPad);

    std::vector<uint64_t> out;
    out.reserve(ext.size());
    for (size_t i = 0; i + qmin <= ext.size(); ++i) {
        int fit = int(std::min(size_t(qmax), ext.size() - i));
        // longest frequent gram starting here; incremental FNV keeps the
        // scan O(1) per extension step
        uint64_t h = kFnvOffset; // dictionary keys use seed 0
        for (int q = 1; q < qmin; ++q) {
            h ^= uint8_t(ext[i + q - 1]);
            h *= kFnvPrime;
        }
        int len = qmin;
        for (int q = qmin; q <= fit; ++q) {
            h ^= uint8_t(ext[i + q - 1]);
            h *= kFnvPrime;
            if (dict.frequent(h))
                len = q;
            else if (q > qmin)
                break;
        }
        out.push_back(fnv1a(ext.data() + i, size_t(len), hash_seed));
    }
    return out;
}

std::vector<std::string> generate_grams(const Genome& s, const GramDictionary& dict) {
    if (s.empty()) throw InputError("empty genome");
    const int qmin = dict.qmin, qmax = dict.qmax;
    std::string ext;
    ext.append(size_t(qmax - 1), kPad);
    ext += s;
    ext.append(size_t(qmax - 1), kPad);

    std::unordered_set<std::string> seen;
    std::vector<std::string> out;
    for (size_t i = 0; i + qmin <= ext.size(); ++i) {
        int fit = int(std::min(size_t(qmax), ext.size() - i));
        int len = qmin;
        for (int q = qmin; q <= fit; ++q) {
            uint64_t h = fnv1a(ext.data() + i, size_t(q), 0);
            if (dict.frequent(h))
                len = q;
            else if (q > qmin)
                break;
            else
                break;
        }
        std::string gram = ext.substr(i, size_t(len));
        if (seen.insert(gram).second) out.push_back(std::move(gram));
    }
    return out;
}

BloomFilter build_filter(std::span<const uint64_t> hashes, long l, uint64_t hash_seed) {
    if (l < 1) throw InputError("filter length must be positive");
    BloomFilter f;
    f.l = uint32_t(l);
    f.hash_seed = hash_seed;
    f.bits = BitVec(size_t(l));
    for (uint64_t h : hashes) f.bits.set(h % uint64_t(l));
    return f;
}

BloomFilter build_filter(const Genome& s, const GramDictionary& dict, long l,
                         uint64_t hash_seed) {
    auto hs = gram_hashes(s, dict, hash_seed);
    return build_filter(hs, l, hash_seed);
}

long hamming(const BloomFilter& a, const BloomFilter& b) {
    if (a.l != b.l || a.hash_seed != b.hash_seed)
        throw InputError("bloom filter configuration mismatch");
    return long(ig::hamming(a.bits, b.bits));
}

Bytes BloomFilter::serialize() const {
    ByteWriter w;
    w.u32be(l);
    w.u64be(hash_seed);
    size_t nbytes = (l + 7) / 8;
    const auto& words = bits.words();
    for (size_t i = 0; i < nbytes; ++i) {
        uint64_t word = words[i / 8];
        w.u8(uint8_t(word >> (8 * (i % 8))));
    }
    return w.take();
}

BloomFilter BloomFilter::parse(ByteReader& r) {
    BloomFilter f;
    f.l = r.u32be();
    f.hash_seed = r.u64be();
    f.bits = BitVec(f.l);
    size_t nbytes = (f.l + 7) / 8;
    auto raw = r.raw(nbytes);
    auto& words = f.bits.words();
    for (size_t i = 0; i < nbytes; ++i)
        words[i / 8] |= uint64_t(raw[i]) << (8 * (i % 8));
    return f;
}

Genome parse_genome_text(const std::string& text) {
    Genome g;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line[0] == '>') continue;
        for (char c : line) {
            if (std::isspace(uint8_t(c))) continue;
            g.push_back(char(std::toupper(uint8_t(c))));
        }
    }
    for (char c : g)
        if (kAlphabet.find(c) == std::string::npos)
            throw InputError(std::string("character outside alphabet: ") + c);
    if (g.empty()) throw InputError("no genome data found");
    return g;
}

Genome load_genome_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw InputError("cannot open genome file: " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_genome_text(ss.str());
}

Genome synth_genome(const SynthProfile& prof, Rng& rng) {
    Genome g;
    g.reserve(prof.length);
    while (g.size() < prof.length) {
        if (rng.unit() < prof.repeat_rate) {
            int period = prof.repeat_period_min +
                         int(rng.below(uint64_t(prof.repeat_period_max -
                                                prof.repeat_period_min + 1)));
            int len = prof.repeat_len_min +
                      int(rng.below(uint64_t(prof.repeat_len_max -
                                             prof.repeat_len_min + 1)));
            std::string motif;
            for (int i = 0; i < period; ++i)
                motif.push_back(kAlphabet[rng.below(4)]);
            for (int i = 0; i < len && g.size() < prof.length; ++i)
                g.push_back(motif[size_t(i % period)]);
        } else {
            size_t run = 20 + rng.below(60);
            for (size_t i = 0; i < run && g.size() < prof.length; ++i)
                g.push_back(kAlphabet[rng.below(4)]);
        }
    }
    return g;
}

Genome mutate_substitutions(const Genome& g, size_t count, Rng& rng) {
    Genome m = g;
    for (size_t i = 0; i < count; ++i) {
        size_t pos = rng.below(m.size());
        char cur = m[pos];
        char nxt;
        do {
            nxt = kAlphabet[rng.below(4)];
        } while (nxt == cur);
        m[pos] = nxt;
    }
    return m;
}

Genome mutate_edits(const Genome& g, size_t count, Rng& rng) {
    Genome m = g;
    for (size_t i = 0; i < count; ++i) {
        int kind = int(rng.below(3));
        if (kind == 0 || m.size() <= 8) {
            size_t pos = rng.below(m.size());
            char cur = m[pos];
            char nxt;
            do {
                nxt = kAlphabet[rng.below(4)];
            } while (nxt == cur);
            m[pos] = nxt;
        } else if (kind == 1) {
            size_t pos = rng.below(m.size() + 1);
            m.insert(m.begin() + long(pos), kAlphabet[rng.below(4)]);
        } else {
            size_t pos = rng.below(m.size());
            m.erase(m.begin() + long(pos));
        }
    }
    return m;
}

Genome mutate_spaced(const Genome& g, size_t u, size_t gap, Rng& rng) {
    if (u == 0) return g;
    size_t span = (u - 1) * gap + 1;
    if (span > g.size()) throw InputError("edits do not fit in genome");
    size_t start = rng.below(g.size() - span + 1);
    Genome m = g;
    for (size_t i = 0; i < u; ++i) {
        size_t pos = start + i * gap;
        char cur = m[pos];
        char nxt;
        do {
            nxt = kAlphabet[rng.below(4)];
        } while (nxt == cur);
        m[pos] = nxt;
    }
    return m;
}

size_t edit_distance(const Genome& a, const Genome& b) {
    const size_t n = a.size(), m = b.size();
    std::vector<size_t> prev(m + 1), cur(m + 1);
    for (size_t j = 0; j <= m; ++j) prev[j] = j;
    for (size_t i = 1; i <= n; ++i) {
        cur[0] = i;
        for (size_t j = 1; j <= m; ++j) {
            size_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    return prev[m];
}

} // namespace ig::grams
