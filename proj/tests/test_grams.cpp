#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "ig/grams.hpp"

using namespace ig;
using namespace ig::grams;

TEST_CASE("required_length reproduces the reference parameterization") {
    CHECK(required_length(0.5, 1, 16569) == 23905);
    CHECK(required_length(0.5, 1, 1) == 2);
    // monotone: doubling n strictly increases l
    for (long n : {10L, 100L, 1000L, 16569L})
        CHECK(required_length(0.5, 1, 2 * n) > required_length(0.5, 1, n));
    CHECK_THROWS_AS(required_length(0.0, 1, 5), InputError);
    CHECK_THROWS_AS(required_length(1.0, 1, 5), InputError);
}

TEST_CASE("fp_rate formula") {
    CHECK(fp_rate(1, 1, 1) == doctest::Approx(1.0));
    CHECK(fp_rate(1000000, 1, 1) == doctest::Approx(1e-6).epsilon(0.01));
    // inverse relation with required_length
    for (long n : {100L, 1000L, 16569L}) {
        long l = required_length(0.5, 1, n);
        CHECK(std::abs(fp_rate(l, 1, n) - 0.5) < 0.01);
    }
}

TEST_CASE("train_dictionary counts substring frequencies") {
    std::vector<Genome> corpus{"AAAA"};
    auto dict = train_dictionary(corpus, 2, 3, 1);
    CHECK(dict.frequency("AA") == 3);
    CHECK(dict.frequency("AAA") == 2);
    CHECK(dict.frequency("AC") == 0);
    // padded grams are trained too
    CHECK(dict.frequency("#A") == 1);

    auto dict2 = train_dictionary(corpus, 2, 3, 1);
    CHECK(dict.digest() == dict2.digest());

    auto empty = train_dictionary(corpus, 2, 3, 100);
    CHECK(empty.freq.empty());

    CHECK_THROWS_AS(train_dictionary(std::span<const Genome>{}, 2, 3, 1), InputError);
}

TEST_CASE("generate_grams with fixed q covers all positions with padding") {
    std::vector<Genome> corpus{"ACGT"};
    auto dict = train_dictionary(corpus, 2, 2, 1);
    auto grams = generate_grams("ACGT", dict);
    std::set<std::string> got(grams.begin(), grams.end());
    CHECK(got == std::set<std::string>{"#A", "AC", "CG", "GT", "T#"});
    // determinism
    auto again = generate_grams("ACGT", dict);
    CHECK(grams == again);
}

TEST_CASE("longest frequent gram wins") {
    // corpus makes "ACG" frequent but not "ACGT"
    std::vector<Genome> corpus{"ACGA", "ACGC", "TACG"};
    auto dict = train_dictionary(corpus, 2, 4, 2);
    CHECK(dict.frequency("ACG") == 3);
    CHECK(dict.frequency("ACGT") == 0);
    auto grams = generate_grams("ACGT", dict);
    CHECK(std::count(grams.begin(), grams.end(), "ACG") == 1);
}

TEST_CASE("substitution locality at fixed q") {
    // one substitution changes at most 2q grams (q removed, q added)
    Rng rng(42);
    SynthProfile prof;
    prof.length = 200;
    prof.repeat_rate = 0.0;
    const int q = 5;
    for (int trial = 0; trial < 40; ++trial) {
        auto base = synth_genome(prof, rng);
        std::vector<Genome> corpus{base};
        auto dict = train_dictionary(corpus, q, q, 1);
        auto a = generate_grams(base, dict);
        auto mut = mutate_substitutions(base, 1, rng);
        auto b = generate_grams(mut, dict);
        std::set<std::string> sa(a.begin(), a.end()), sb(b.begin(), b.end());
        std::vector<std::string> diff;
        std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(),
                                      std::back_inserter(diff));
        CHECK(diff.size() <= 2 * q);
    }
}

TEST_CASE("bloom filter basics") {
    std::vector<Genome> corpus{"ACGTACGTAC"};
    auto dict = train_dictionary(corpus, 3, 5, 1);

    SUBCASE("empty gram set gives all-zero filter") {
        auto f = build_filter(std::span<const uint64_t>{}, 64, 9);
        CHECK(f.weight() == 0);
    }
    SUBCASE("no false negatives") {
        auto hashes = gram_hashes("ACGTACGTAC", dict, 77);
        auto f = build_filter(hashes, 512, 77);
        for (uint64_t h : hashes) CHECK(f.test_hash(h));
    }
    SUBCASE("hamming properties") {
        auto fa = build_filter("ACGTACGTAC", dict, 256, 1);
        auto fb = build_filter("ACGTTCGTAC", dict, 256, 1);
        CHECK(hamming(fa, fa) == 0);
        CHECK(hamming(fa, fb) == hamming(fb, fa));
        auto zero = build_filter(std::span<const uint64_t>{}, 256, 1);
        CHECK(size_t(hamming(fa, zero)) == fa.weight());
        auto other = build_filter("ACGTACGTAC", dict, 256, 2);
        CHECK_THROWS_AS(hamming(fa, other), InputError);
    }
    SUBCASE("serialization round trip") {
        auto fa = build_filter("ACGTACGTAC", dict, 100, 123);
        auto bytes = fa.serialize();
        CHECK(bytes.size() == 4 + 8 + 13);
        ByteReader r(bytes);
        auto fb = BloomFilter::parse(r);
        CHECK(fa == fb);
    }
}

TEST_CASE("empirical false-positive rate within binomial band") {
    Rng rng(7);
    SynthProfile prof;
    prof.length = 2000;
    prof.repeat_rate = 0.0;
    auto base = synth_genome(prof, rng);
    std::vector<Genome> corpus{base};
    const int q = 8;
    auto dict = train_dictionary(corpus, q, q, 1);
    auto grams = generate_grams(base, dict);
    long l = required_length(0.5, 1, long(grams.size()));
    auto f = build_filter(base, dict, l, 3);

    std::set<std::string> inserted(grams.begin(), grams.end());
    double p = fp_rate(l, 1, long(inserted.size()));
    const int trials = 20000;
    int hits = 0;
    int done = 0;
    while (done < trials) {
        std::string probe;
        for (int i = 0; i < q; ++i) probe.push_back(kAlphabet[rng.below(4)]);
        if (inserted.count(probe)) continue;
        ++done;
        if (f.test_hash(fnv1a(probe.data(), probe.size(), 3))) ++hits;
    }
    double rate = double(hits) / trials;
    double band = 2.576 * std::sqrt(p * (1 - p) / trials);
    CHECK(std::abs(rate - p) < band + 0.005);
}

TEST_CASE("genome parsing") {
    CHECK(parse_genome_text(">hdr\nacgt\nACGT\n") == "ACGTACGT");
    CHECK(parse_genome_text("ac gt\n") == "ACGT");
    CHECK_THROWS_AS(parse_genome_text(">only header\n"), InputError);
    CHECK_THROWS_AS(parse_genome_text("ACGX"), InputError);
}

TEST_CASE("edit distance oracle") {
    CHECK(edit_distance("ACGT", "ACGT") == 0);
    CHECK(edit_distance("ACGT", "ACCT") == 1);
    CHECK(edit_distance("ACGT", "AGT") == 1);
    CHECK(edit_distance("ACGT", "TACGT") == 1);
    CHECK(edit_distance("", "ACG") == 3);
    CHECK(edit_distance("kitten", "sitting") == 3);
}

TEST_CASE("mutate_spaced places u substitutions gap apart") {
    Rng rng(5);
    SynthProfile prof;
    prof.length = 300;
    prof.repeat_rate = 0.0;
    auto g = synth_genome(prof, rng);
    auto m = mutate_spaced(g, 3, 10, rng);
    std::vector<size_t> diffs;
    for (size_t i = 0; i < g.size(); ++i)
        if (g[i] != m[i]) diffs.push_back(i);
    REQUIRE(diffs.size() == 3);
    CHECK(diffs[1] - diffs[0] == 10);
    CHECK(diffs[2] - diffs[1] == 10);
}
