#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "gia/gia.h"

/* one line per criterion; exit status counts failures */
int main(int argc, char** argv) {
  const char* cache = argc > 1 ? argv[1] : NULL;
  int failed = 0;
  for (int id = 1; id <= 15; ++id) {
    char request[256];
    char* out = NULL;
    if (cache)
      snprintf(request, sizeof request, "{\"criterion\": %d, \"cache_dir\": \"%s\"}", id, cache);
    else
      snprintf(request, sizeof request, "{\"criterion\": %d}", id);
    const gia_status st = gia_run("selftest", request, "table", &out);
    if (out) {
      fputs(out, stdout);
      gia_string_free(out);
    } else {
      printf("criterion %d: FAIL error %s\n", id, gia_last_error());
    }
    if (st != GIA_OK) ++failed;
  }
  printf("%d of 15 criteria passed\n", 15 - failed);
  fflush(stdout);
  return failed ? 1 : 0;
}
