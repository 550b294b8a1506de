// Serial references against the OpenMP kernels on the full noun database.
// Set DSN_WORDNET_DIR to point at another copy of the database.

#include <cstdlib>
#include <vector>

#include <benchmark/benchmark.h>

#include "dsn/kernels.hpp"
#include "dsn/lexicon.hpp"
#include "dsn/measures.hpp"

namespace
{

const dsn::Lexicon& wordnet()
{
    static const dsn::Lexicon lex = [] {
        const char* env = std::getenv("DSN_WORDNET_DIR");
        return dsn::load_wordnet_dir(env ? env : DSN_DEFAULT_WORDNET_DIR);
    }();
    return lex;
}

dsn::Execution exec_of(const benchmark::State& state)
{
    return state.range(0) == 0 ? dsn::Execution::serial : dsn::Execution::parallel;
}

void label(benchmark::State& state)
{
    state.SetLabel(state.range(0) == 0 ? "serial" : "openmp");
}

void BM_descendant_counts(benchmark::State& state)
{
    const auto& g = wordnet().graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(dsn::kernels::descendant_counts(g.synsets(), exec_of(state)));
    label(state);
}

void BM_subsumer_counts(benchmark::State& state)
{
    const auto& g = wordnet().graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(dsn::kernels::subsumer_counts(g.synsets(), exec_of(state)));
    label(state);
}

void BM_word_stats(benchmark::State& state)
{
    const auto& g = wordnet().graph;
    std::vector<std::vector<dsn::NodeIndex>> senses;
    senses.reserve(g.lemmas().size());
    for (std::size_t i = 0; i < g.lemmas().size(); ++i)
    {
        const auto s = g.senses_of(i);
        senses.emplace_back(s.begin(), s.end());
    }
    const auto distance = dsn::kernels::root_distances(g.synsets(), g.root());
    for (auto _ : state)
        benchmark::DoNotOptimize(dsn::kernels::word_stats(g.synsets(), senses, distance, exec_of(state)));
    label(state);
}

void BM_extrema(benchmark::State& state)
{
    const auto& g = wordnet().graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(dsn::measure_kernels::extrema(g, dsn::CommonnessDef::leaf_fraction,
                                                               dsn::ExtremaScope::words, exec_of(state)));
    label(state);
}

void BM_ic_table(benchmark::State& state)
{
    const auto& g = wordnet().graph;
    const auto cache = dsn::measure_kernels::extrema(g, dsn::CommonnessDef::leaf_fraction, dsn::ExtremaScope::words,
                                                     dsn::Execution::serial);
    for (auto _ : state)
        benchmark::DoNotOptimize(dsn::measure_kernels::synset_information_content(
            g, dsn::CommonnessDef::leaf_fraction, cache.words, exec_of(state)));
    label(state);
}

void BM_similarity_matrix(benchmark::State& state)
{
    const auto& g = wordnet().graph;
    static const dsn::MeasureContext ctx(g, dsn::MeasureConfig{});
    std::vector<std::string> words;
    for (std::size_t i = 0; i < g.lemmas().size() && words.size() < 120; i += 983)
        words.push_back(g.lemmas()[i]);
    for (auto _ : state)
        benchmark::DoNotOptimize(ctx.similarity_matrix(words, exec_of(state)));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(words.size() * words.size()));
    label(state);
}

} // namespace

BENCHMARK(BM_descendant_counts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_subsumer_counts)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_word_stats)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_extrema)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ic_table)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_similarity_matrix)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
