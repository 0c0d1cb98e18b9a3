// Copyright 2026 The Authors.
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

// rigspec: rigidity and spectral checks over graph6 corpora.
//
//   rigspec analyze corpus.g6
//   rigspec thm13 --nmin 3 --nmax 8
//   rigspec sweep-lemma24 --i 2 --amin 3 --amax 12 --nmax 60
//   rigspec extremal --delta 6 --nmax 26
//
// Output is newline-delimited JSON (or CSV with --format csv) on stdout.
// Exit status: 0 ok, 1 consistency violation, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <string>

#include "CLI11.hpp"
#include "rigspec/rigspec.h"

namespace {

int finish(rs_status status, char* out, int exit_code) {
  if (out != nullptr) {
    std::fputs(out, stdout);
    rs_string_free(out);
  }
  if (status != RS_OK) {
    std::fprintf(stderr, "rigspec: %s", rs_last_error());
    std::string msg = rs_last_error();
    if (msg.empty() || msg.back() != '\n') std::fputc('\n', stderr);
    return exit_code == 0 ? 2 : exit_code;
  }
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigidity and spectral-radius checks for graphs in the plane"};
  app.require_subcommand(1);

  rs_options opts;
  rs_options_default(&opts);
  std::string format = "json";
  app.add_option("--seed", opts.seed, "Seed for random placements")
      ->envname("RIGSPEC_SEED");
  app.add_option("--tol", opts.tol, "Slack for spectral threshold comparisons");
  app.add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}));

  std::string input;
  auto* analyze = app.add_subcommand("analyze", "Report on every graph6 line of a file");
  analyze->add_option("file", input, "graph6 corpus, or - for stdin")->required();

  int nmin = 3;
  int nmax13 = 8;
  auto* thm13 = app.add_subcommand("thm13", "Spectral maximum over minimally rigid graphs");
  thm13->add_option("--nmin", nmin)->required();
  thm13->add_option("--nmax", nmax13)->required();

  int family_i = 2;
  int amin = 3;
  int amax = 12;
  int nmax24 = 60;
  auto* sweep = app.add_subcommand("sweep-lemma24", "Quartic roots and monotonicity in a");
  sweep->add_option("--i", family_i)->required();
  sweep->add_option("--amin", amin)->required();
  sweep->add_option("--amax", amax)->required();
  sweep->add_option("--nmax", nmax24)->required();

  int delta = 6;
  int nmax_ext = 26;
  auto* extremal = app.add_subcommand("extremal", "Check the two exceptional families");
  extremal->add_option("--delta", delta)->required();
  extremal->add_option("--nmax", nmax_ext)->required();

  // Global flags are accepted after the subcommand as well.
  for (CLI::App* sub : {analyze, thm13, sweep, extremal}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  opts.format = format == "csv" ? RS_FORMAT_CSV : RS_FORMAT_JSON;

  char* out = nullptr;
  int exit_code = 0;
  rs_status status = RS_OK;
  if (analyze->parsed()) {
    std::string corpus;
    if (input == "-") {
      corpus.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
      std::ifstream file(input, std::ios::binary);
      if (!file) {
        std::fprintf(stderr, "rigspec: cannot open %s\n", input.c_str());
        return 2;
      }
      corpus.assign(std::istreambuf_iterator<char>(file), {});
    }
    status = rs_run_analyze(corpus.data(), corpus.size(), &opts, &out, &exit_code);
  } else if (thm13->parsed()) {
    status = rs_run_thm13(nmin, nmax13, &opts, &out, &exit_code);
  } else if (sweep->parsed()) {
    status = rs_run_sweep_lemma24(family_i, amin, amax, nmax24, &opts, &out, &exit_code);
  } else if (extremal->parsed()) {
    status = rs_run_extremal(delta, nmax_ext, &opts, &out, &exit_code);
  }
  return finish(status, out, exit_code);
}
