/* Exercises the C interface from plain C. */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "forbconf/forbconf.h"

static int failures = 0;

#define EXPECT(cond)                                             \
  do {                                                           \
    if (!(cond)) {                                               \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                \
    }                                                            \
  } while (0)

static void test_matrices(void) {
  fc_matrix* m = NULL;
  fc_matrix* c = NULL;
  char* text = NULL;
  int v = -1;
  int simple = -1;

  EXPECT(fc_matrix_parse("101\n011\n", &m) == FC_OK);
  EXPECT(fc_matrix_rows(m) == 2 && fc_matrix_cols(m) == 3);
  EXPECT(fc_matrix_get(m, 0, 1, &v) == FC_OK && v == 0);
  EXPECT(fc_matrix_get(m, 2, 0, &v) == FC_OUT_OF_RANGE);
  EXPECT(strstr(fc_last_error(), "outside") != NULL);
  EXPECT(fc_matrix_complement(m, &c) == FC_OK);
  EXPECT(fc_matrix_to_text(c, &text) == FC_OK && strcmp(text, "010\n100\n") == 0);
  fc_string_free(text);
  EXPECT(fc_matrix_is_simple(m, &simple) == FC_OK && simple == 1);
  fc_matrix_free(c);
  fc_matrix_free(m);

  m = NULL;
  EXPECT(fc_matrix_parse("10\n1\n", &m) == FC_PARSE_ERROR && m == NULL);
  EXPECT(fc_matrix_from_spec("Q(", &m) == FC_PARSE_ERROR);
  EXPECT(strstr(fc_last_error(), "grammar") != NULL || strlen(fc_spec_grammar()) > 0);
  EXPECT(fc_matrix_from_spec("I(3)", NULL) == FC_NULL_ARGUMENT);
  EXPECT(strcmp(fc_status_name(FC_PRECONDITION), "precondition failed") == 0);
}

static void test_containment(void) {
  fc_matrix* f = NULL;
  fc_matrix* a = NULL;
  char* cert = NULL;
  int contained = -1;

  EXPECT(fc_matrix_from_spec("F9", &f) == FC_OK);
  EXPECT(fc_matrix_from_spec("b01 x I(3)", &a) == FC_OK);
  EXPECT(fc_contains(f, a, &contained, &cert) == FC_OK && contained == 1);
  EXPECT(cert != NULL && strstr(cert, "row_map") != NULL);
  fc_string_free(cert);
  fc_matrix_free(f);
  fc_matrix_free(a);

  EXPECT(fc_matrix_from_spec("1(4,1)", &f) == FC_OK);
  EXPECT(fc_matrix_from_spec("I(3) x I(3) x I(3)", &a) == FC_OK);
  EXPECT(fc_contains(f, a, &contained, NULL) == FC_OK && contained == 0);
  fc_matrix_free(f);
  fc_matrix_free(a);
}

static void test_search(void) {
  fc_family* fam = NULL;
  fc_search_result* r = NULL;
  fc_search_options opts;
  fc_matrix* w = NULL;
  char* report = NULL;

  fc_search_options_init(&opts);
  EXPECT(fc_family_parse("Q9, 131", &fam) == FC_OK && fc_family_size(fam) == 2);
  EXPECT(fc_forb(6, fam, &opts, &r) == FC_OK);
  EXPECT(fc_search_result_value(r) == 12);
  EXPECT(fc_search_result_status(r) == FC_SEARCH_EXACT);
  EXPECT(strcmp(fc_search_status_name(fc_search_result_status(r)), "exact") == 0);
  EXPECT(fc_search_result_witness(r, &w) == FC_OK && fc_matrix_cols(w) == 12 && fc_matrix_rows(w) == 6);
  fc_matrix_free(w);
  fc_search_result_free(r);
  fc_family_free(fam);

  EXPECT(fc_family_parse("Q9", &fam) == FC_OK);
  opts.min_sum = 3;
  opts.max_sum = 3;
  EXPECT(fc_forb(8, fam, &opts, &r) == FC_OK && fc_search_result_value(r) == 6);
  fc_search_result_free(r);
  fc_search_options_init(&opts);
  EXPECT(fc_slope(fam, 3, 5, &opts, &report) == FC_OK && strstr(report, "slope") != NULL);
  fc_string_free(report);
  EXPECT(fc_forb(0, fam, &opts, &r) == FC_INVALID_ARGUMENT);
  fc_family_free(fam);
  EXPECT(fc_family_parse("Q9,,", &fam) == FC_PARSE_ERROR);
}

static void test_constructions(void) {
  fc_matrix* m = NULL;
  size_t size = 0;
  char* text = NULL;

  EXPECT(fc_construct("c3", 6, 0, 0, &m) == FC_OK && fc_matrix_cols(m) == 8);
  fc_matrix_free(m);
  EXPECT(fc_construction_size("sec5_counterexample", 5, 0, 0, &size) == FC_OK && size > 0);
  EXPECT(fc_construction_family("c3", 0, 0, &text) == FC_OK && strlen(text) > 0);
  fc_string_free(text);
  EXPECT(fc_construction_list(&text) == FC_OK && strstr(text, "c3") != NULL);
  fc_string_free(text);
  EXPECT(fc_construct("nosuch", 6, 0, 0, &m) == FC_INVALID_ARGUMENT);
}

static void test_extremal(void) {
  const size_t c4[] = {0, 2, 0, 3, 1, 2, 1, 3};
  const size_t k4_3[] = {0, 1, 2, 0, 1, 3, 0, 2, 3, 1, 2, 3};
  size_t value = 0;

  EXPECT(fc_ex_graph(6, 4, c4, 4, &value, NULL) == FC_OK && value == 7);
  EXPECT(fc_ex_hypergraph(5, 3, 4, k4_3, 4, &value, NULL) == FC_OK && value == 7);
  EXPECT(fc_zarankiewicz(4, 4, &value, NULL) == FC_OK && value == 9);
  EXPECT(fc_ex_graph(6, 4, c4, 0, &value, NULL) == FC_INVALID_ARGUMENT);
}

static void test_structure(void) {
  fc_matrix* a = NULL;
  fc_q9_outcome outcome;
  char* report = NULL;
  size_t k = 0;
  double ratio = -1.0;

  EXPECT(fc_matrix_from_spec("Ic(4)", &a) == FC_OK);
  EXPECT(fc_q9_classify(a, 3, &outcome, &report) == FC_OK && outcome == FC_Q9_PARTITION);
  fc_string_free(report);
  EXPECT(fc_q9_classify(a, 4, &outcome, NULL) == FC_INVALID_ARGUMENT);
  EXPECT(fc_induction_decompose(a, 0, &report) == FC_OK && strstr(report, "|B|") != NULL);
  fc_string_free(report);
  fc_matrix_free(a);

  EXPECT(fc_matrix_from_spec("I(6)", &a) == FC_OK);
  EXPECT(fc_find_tik(a, 2, &k) == FC_OK && k == 0);
  EXPECT(fc_q3_stability(a, 2, 2, &ratio, &report) == FC_OK && ratio >= 0.0);
  fc_string_free(report);
  fc_matrix_free(a);

  EXPECT(fc_matrix_from_spec("I(3) x T(3)", &a) == FC_OK);
  EXPECT(fc_q3_stability(a, 2, 0, &ratio, NULL) == FC_PRECONDITION);
  fc_matrix_free(a);
}

static void test_verify(void) {
  fc_verify_options opts;
  char* report = NULL;
  size_t bad = 99;
  const size_t sizes[] = {3};

  fc_verify_options_init(&opts);
  opts.sizes = sizes;
  opts.size_count = 1;
  EXPECT(fc_verify("avoid a I3 : IcxIc\nforb b Q9 : m=4 value=13\n", NULL, &opts, &report, &bad) == FC_OK);
  EXPECT(bad == 0 && strstr(report, "a  checked at sizes 3  PASS") != NULL);
  fc_string_free(report);
  EXPECT(fc_verify("avoid a I3 : IxI\n", NULL, &opts, &report, &bad) == FC_OK && bad == 1);
  fc_string_free(report);
  EXPECT(fc_verify("nonsense\n", NULL, &opts, &report, &bad) == FC_PARSE_ERROR);
}

int main(void) {
  test_matrices();
  test_containment();
  test_search();
  test_constructions();
  test_extremal();
  test_structure();
  test_verify();
  if (failures) {
    fprintf(stderr, "%d failures\n", failures);
    return 1;
  }
  printf("capi ok\n");
  return 0;
}
