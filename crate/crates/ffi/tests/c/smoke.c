#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "ccc.h"

#define CHECK(cond)                                                          \
    do {                                                                     \
        if (!(cond)) {                                                       \
            const char *e = ccc_last_error();                                \
            fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond,   \
                    e ? e : "no error");                                     \
            return 1;                                                        \
        }                                                                    \
    } while (0)

int main(void) {
    CccVertex base = {0, 1};
    CccVertex target;
    CHECK(ccc_parse_vertex(7, "0101100:6", &target) == CCC_STATUS_OK);
    CHECK(target.word == 0x1A && target.cycle == 6);

    uint32_t d = 0;
    CHECK(ccc_distance(7, base, target, &d) == CCC_STATUS_OK);
    CHECK(d == 8);

    CccPath *path = NULL;
    CHECK(ccc_route(7, base, target, &path) == CCC_STATUS_OK);
    CHECK(ccc_path_vertex_count(path) == 9);
    CccVertex last;
    CHECK(ccc_path_get(path, 8, &last) == CCC_STATUS_OK);
    CHECK(last.word == target.word && last.cycle == target.cycle);
    CHECK(ccc_path_get(path, 9, &last) == CCC_STATUS_INVALID_VERTEX);
    ccc_path_free(path);

    CccVerdict v;
    CHECK(ccc_analyze(4, false, &v) == CCC_STATUS_OK);
    CHECK(v.distance_balanced && v.nicely_distance_balanced);
    CHECK(v.has_ndb_constant && v.ndb_constant == 32);
    CHECK(ccc_analyze(5, false, &v) == CCC_STATUS_OK);
    CHECK(!v.has_ndb_constant && v.cycle_edge.equal == 32);

    CccAutomorphism *swap = NULL;
    CccVertex u = {0, 1}, w = {1, 1};
    CHECK(ccc_swap_automorphism(3, u, w, &swap) == CCC_STATUS_OK);
    CccVertex img;
    CHECK(ccc_automorphism_apply(swap, u, &img) == CCC_STATUS_OK);
    CHECK(img.word == 1 && img.cycle == 1);
    ccc_automorphism_free(swap);

    CHECK(ccc_distance(2, base, base, &d) == CCC_STATUS_DIMENSION_OUT_OF_RANGE);
    CHECK(strcmp(ccc_status_str(CCC_STATUS_GATE), "resource gate") == 0);

    char *json = NULL;
    bool ok = false;
    CHECK(ccc_verify_json(4, &json, &ok) == CCC_STATUS_OK);
    CHECK(ok && strstr(json, "\"all_passed\": true") != NULL);
    ccc_string_free(json);

    puts("ok");
    return 0;
}
