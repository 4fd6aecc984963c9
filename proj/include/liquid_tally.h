// Copyright 2026 The liquid-tally Authors.
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

/* C interface to the liquid-tally library. Every call that can fail returns
 * an lqt_status; details of the last failure on the calling thread are
 * available from lqt_last_error() and lqt_last_error_line(). Handles are
 * opaque and owned by the caller until passed to the matching free. */
#ifndef LIQUID_TALLY_H_
#define LIQUID_TALLY_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LQT_API __declspec(dllexport)
#else
#define LQT_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lqt_status {
  LQT_OK = 0,
  LQT_ERR_SYNTAX,
  LQT_ERR_INVALID_ID,
  LQT_ERR_SELF_LOOP,
  LQT_ERR_DUPLICATE_EDGE,
  LQT_ERR_DUPLICATE_RANK,
  LQT_ERR_RANK_MIXING,
  LQT_ERR_VOTE_AND_DELEGATE,
  LQT_ERR_CONFLICTING_VOTE,
  LQT_ERR_UNKNOWN_AGENT,
  LQT_ERR_MIXED_RANKING,
  LQT_ERR_WRONG_KIND,
  LQT_ERR_NOT_DELEGABLE,
  LQT_ERR_ROUTE_MISMATCH,
  LQT_ERR_PATH_EXPLOSION,
  LQT_ERR_UNKNOWN_FIXTURE,
  LQT_ERR_CHANGED_AGENT_MISMATCH,
  LQT_ERR_INVALID_ARGUMENT,
  LQT_ERR_IO,
  LQT_ERR_INTERNAL
} lqt_status;

typedef struct lqt_graph lqt_graph;
typedef struct lqt_options lqt_options;
typedef struct lqt_report lqt_report;

/* Errors. */
LQT_API const char* lqt_status_name(lqt_status status);
LQT_API const char* lqt_last_error(void);
/* Input line of the last parse error, or 0. */
LQT_API int lqt_last_error_line(void);

/* Preference graphs in the line-oriented .ldg format. */
LQT_API lqt_status lqt_graph_parse(const char* text, lqt_graph** out);
LQT_API lqt_status lqt_graph_load(const char* path, lqt_graph** out);
LQT_API lqt_status lqt_graph_fixture(const char* name, lqt_graph** out);
/* Canonical text; release with lqt_string_free. */
LQT_API lqt_status lqt_graph_serialize(const lqt_graph* graph, char** out);
LQT_API size_t lqt_graph_agent_count(const lqt_graph* graph);
LQT_API void lqt_graph_free(lqt_graph* graph);
LQT_API void lqt_string_free(char* s);

/* Options shared by all commands. Defaults: mechanism bfd, cap 3, seed 0,
 * enum limit 1e5, path guard 1e6, 4096 Monte Carlo samples, text output,
 * 100 fuzz trials of 8 agents. */
LQT_API lqt_options* lqt_options_new(void);
LQT_API void lqt_options_free(lqt_options* options);
/* Accepts a plain token (lf, bfd, dfd1, dfd2, greedycap, fluid) or
 * "greedycap(C=<cap>)". */
LQT_API lqt_status lqt_options_set_mechanism(lqt_options* o, const char* token);
/* Comma-separated mechanism tokens for lqt_compare. */
LQT_API lqt_status lqt_options_set_mechanisms(lqt_options* o, const char* list);
LQT_API lqt_status lqt_options_set_cap(lqt_options* o, int64_t cap);
LQT_API lqt_status lqt_options_set_seed(lqt_options* o, uint64_t seed);
LQT_API lqt_status lqt_options_set_enum_limit(lqt_options* o, int64_t limit);
LQT_API lqt_status lqt_options_set_path_guard(lqt_options* o, int64_t guard);
LQT_API lqt_status lqt_options_set_mc_samples(lqt_options* o, int64_t samples);
/* "text" or "machine". */
LQT_API lqt_status lqt_options_set_format(lqt_options* o, const char* format);
/* Comma-separated property tokens: rtd rttr pe<k> gre lfe sd sdod nad cp
 * det (audit, compare) and lp (fuzz only). */
LQT_API lqt_status lqt_options_set_properties(lqt_options* o, const char* list);
LQT_API lqt_status lqt_options_set_trials(lqt_options* o, int64_t trials);
LQT_API lqt_status lqt_options_set_agents(lqt_options* o, int64_t agents);
/* "onp", "mrp" or "mup"; defaults to the mechanism's own kind. */
LQT_API lqt_status lqt_options_set_kind(lqt_options* o, const char* kind);
/* Nonzero restricts generated delegations to direct voters. */
LQT_API lqt_status lqt_options_set_proxy(lqt_options* o, int proxy);
/* Scenario trials per mechanism behind the table1 local-predictability column. */
LQT_API lqt_status lqt_options_set_lp_trials(lqt_options* o, int64_t trials);

/* Commands. Each produces a report holding the rendered document. */
LQT_API lqt_status lqt_tally(const lqt_graph* graph, const lqt_options* o,
                             lqt_report** out);
LQT_API lqt_status lqt_audit(const lqt_graph* graph, const lqt_options* o,
                             lqt_report** out);
LQT_API lqt_status lqt_scenario(const lqt_graph* round1,
                                const lqt_graph* round2, const char* changed,
                                const char* outcome, const lqt_options* o,
                                lqt_report** out);
/* Reads a scenario manifest (round1/round2/changed/outcome lines). */
LQT_API lqt_status lqt_scenario_manifest(const char* path,
                                         const lqt_options* o,
                                         lqt_report** out);
LQT_API lqt_status lqt_compare(const lqt_graph* graph, const lqt_options* o,
                               lqt_report** out);
LQT_API lqt_status lqt_fuzz(const lqt_options* o, lqt_report** out);
/* manifest may be NULL for the built-in fixtures. */
LQT_API lqt_status lqt_table1(const char* manifest, const lqt_options* o,
                              lqt_report** out);
LQT_API lqt_status lqt_fixtures_emit(const char* name, const char* dir,
                                     const lqt_options* o, lqt_report** out);

/* Reports. */
LQT_API const char* lqt_report_text(const lqt_report* report);
/* Number of VIOLATED verdicts (audit, scenario, fuzz). */
LQT_API int64_t lqt_report_violations(const lqt_report* report);
/* Totals of the reported routing; LQT_ERR_INVALID_ARGUMENT when the command
 * produced none. */
LQT_API lqt_status lqt_report_totals(const lqt_report* report, int64_t* yes,
                                     int64_t* no, int64_t* unresolved);
LQT_API void lqt_report_free(lqt_report* report);

#ifdef __cplusplus
}
#endif

#endif /* LIQUID_TALLY_H_ */
