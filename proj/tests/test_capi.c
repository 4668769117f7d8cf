#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "gia/gia.h"

static int failures = 0;

#define EXPECT(cond)                                              \
  do {                                                            \
    if (!(cond)) {                                                \
      fprintf(stderr, "%s:%d: %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                 \
    }                                                             \
  } while (0)

int main(void) {
  gia_graph* k2 = NULL;
  gia_graph* tri = NULL;
  char* s = NULL;
  EXPECT(gia_graph_parse("A_", &k2) == GIA_OK);
  EXPECT(gia_graph_parse("1-2,1-3,2-3", &tri) == GIA_OK);
  EXPECT(gia_count_subgraphs(k2, tri, &s) == GIA_OK && strcmp(s, "3") == 0);
  gia_string_free(s);
  EXPECT(gia_graph_canonical(tri, &s) == GIA_OK && strcmp(s, "Bw") == 0);
  gia_string_free(s);

  gia_graph* bad = NULL;
  EXPECT(gia_graph_parse("!!", &bad) == GIA_ERR_PARSE);
  EXPECT(strlen(gia_last_error()) > 0);
  EXPECT(gia_graph_parse("0-1", NULL) == GIA_ERR_INVALID_ARGUMENT);

  gia_poset* p = NULL;
  size_t size = 0;
  EXPECT(gia_poset_full(4, -1, NULL, &p) == GIA_OK);
  EXPECT(gia_poset_size(p, &size) == GIA_OK && size == 11);
  EXPECT(gia_poset_member(p, 10, &s) == GIA_OK && strcmp(s, "C~") == 0);
  gia_string_free(s);
  EXPECT(gia_poset_member(p, 11, &s) == GIA_ERR_INVALID_ARGUMENT);
  size_t idx = 0;
  EXPECT(gia_poset_index_of(p, tri, &idx) == GIA_OK && idx == 4);

  gia_matrix* e = NULL;
  gia_matrix* inv = NULL;
  size_t rows = 0, cols = 0;
  EXPECT(gia_mtransform(p, &e) == GIA_OK);
  EXPECT(gia_matrix_dims(e, &rows, &cols) == GIA_OK && rows == 11 && cols == 11);
  EXPECT(gia_matrix_entry(e, 10, 2, &s) == GIA_OK && strcmp(s, "12") == 0);
  gia_string_free(s);
  EXPECT(gia_mtransform_power(p, e, -1, &inv) == GIA_OK);
  EXPECT(gia_matrix_entry(inv, 10, 2, &s) == GIA_OK && strcmp(s, "12") == 0);
  gia_string_free(s);
  EXPECT(gia_matrix_entry(inv, 4, 1, &s) == GIA_OK && strcmp(s, "3") == 0);
  gia_string_free(s);
  EXPECT(gia_matrix_csv(e, &s) == GIA_OK && strncmp(s, "1,0,0", 5) == 0);
  gia_string_free(s);

  gia_graph* p3 = NULL;
  EXPECT(gia_graph_parse("Bo", &p3) == GIA_OK);
  EXPECT(gia_product(k2, p3, 5, "all", &s) == GIA_OK && strstr(s, "\"agree\": true") != NULL);
  gia_string_free(s);

  EXPECT(gia_run("count", "{\"pattern\": \"A_\", \"host\": \"Bw\"}", "csv", &s) == GIA_OK && strcmp(s, "count\n3\n") == 0);
  gia_string_free(s);
  EXPECT(gia_run("nope", "{}", "json", &s) == GIA_ERR_INVALID_ARGUMENT);
  EXPECT(gia_run("count", "{not json", "json", &s) == GIA_ERR_PARSE);
  EXPECT(gia_run("enumerate", "{\"n\": 17}", "json", &s) == GIA_ERR_CAP_EXCEEDED);
  EXPECT(gia_run("selftest", "{\"criterion\": 1}", "json", &s) == GIA_OK);
  gia_string_free(s);

  EXPECT(gia_set_parallelism(2) == GIA_OK && gia_parallelism() == 2);
  gia_set_parallelism(1);

  gia_matrix_free(inv);
  gia_matrix_free(e);
  gia_poset_free(p);
  gia_graph_free(p3);
  gia_graph_free(k2);
  gia_graph_free(tri);
  if (failures) fprintf(stderr, "%d failure(s)\n", failures);
  return failures ? 1 : 0;
}
