// Copyright 2026 The qchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "qchan/compiler.hpp"
#include "qchan/random.hpp"
#include "qchan/solovay_kitaev.hpp"

using namespace qchan;

namespace {

const LookupDatabase &desk_db() {
    static const LookupDatabase db = LookupDatabase::build(GateSet::from_names("H,T"), 0.35, 16);
    return db;
}

std::vector<Unitary2> targets(int n) {
    std::mt19937_64 rng(7);
    std::vector<Unitary2> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(Unitary2::nearest(haar_unitary(2, rng)));
    }
    return out;
}

void BM_DbBuild(benchmark::State &state) {
    GateSet gs = GateSet::from_names("H,T");
    for (auto _ : state) {
        LookupDatabase db = LookupDatabase::build(gs, 0.35, static_cast<int>(state.range(0)));
        benchmark::DoNotOptimize(db.words_enumerated());
    }
}
BENCHMARK(BM_DbBuild)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_Lookup(benchmark::State &state) {
    const LookupDatabase &db = desk_db();
    auto us = targets(256);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(db.lookup(us[i++ % us.size()]));
    }
}
BENCHMARK(BM_Lookup);

void BM_SkDecompose(benchmark::State &state) {
    const LookupDatabase &db = desk_db();
    auto us = targets(64);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sk_decompose(us[i++ % us.size()], static_cast<int>(state.range(0)), db));
    }
}
BENCHMARK(BM_SkDecompose)->DenseRange(0, 4)->Unit(benchmark::kMicrosecond);

void BM_DecomposeChannel(benchmark::State &state) {
    std::vector<AffineChannel> chans;
    for (std::uint64_t s = 0; s < 64; ++s) {
        chans.push_back(kraus_to_affine(random_channel(s)));
    }
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(decompose_channel(chans[i++ % chans.size()]));
    }
}
BENCHMARK(BM_DecomposeChannel)->Unit(benchmark::kMicrosecond);

void BM_ChannelOfProgram(benchmark::State &state) {
    BranchedProgram prog = build_program(decompose_channel(kraus_to_affine(random_channel(3))));
    for (auto _ : state) {
        benchmark::DoNotOptimize(channel_of_program(prog));
    }
}
BENCHMARK(BM_ChannelOfProgram)->Unit(benchmark::kMicrosecond);

void BM_CompileGateSet(benchmark::State &state) {
    const LookupDatabase &db = desk_db();
    CompileRequest req;
    req.channel = kraus_to_affine(random_channel(11));
    req.epsilon = 0.3;
    req.mode = CompileMode::GateSet;
    req.db = &db;
    for (auto _ : state) {
        benchmark::DoNotOptimize(compile(req));
    }
}
BENCHMARK(BM_CompileGateSet)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
