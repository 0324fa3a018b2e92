#include <stdio.h>
#include <string.h>
#include "chromsym.h"

static int fail(const char *what) {
    const char *e = chromsym_last_error();
    fprintf(stderr, "%s: %s\n", what, e ? e : "(no message)");
    return 1;
}

int main(void) {
    ChromsymPoset *p = NULL;
    ChromsymGraph *g = NULL;
    char *value = NULL;
    uint64_t count = 0;

    if (chromsym_poset_from_json("{\"n\":5,\"relations\":[[1,3],[1,4],[2,4],[2,5],[3,5]]}", &p) != CHROMSYM_STATUS_OK)
        return fail("poset");
    if (chromsym_poset_count_tableaux(p, "3,2", "standard-and-cyclic", &count) != CHROMSYM_STATUS_OK)
        return fail("count");
    if (chromsym_poset_incomparability_graph(p, &g) != CHROMSYM_STATUS_OK)
        return fail("graph");
    if (chromsym_graph_trace(g, "phi", "3,2", &value) != CHROMSYM_STATUS_OK)
        return fail("trace");
    printf("%llu %s\n", (unsigned long long)count, value);
    chromsym_string_free(value);

    if (chromsym_poset_from_json("{\"n\":2,\"relations\":[[1,2],[2,1]]}", &p) == CHROMSYM_STATUS_OK)
        return 1;
    if (chromsym_last_error() == NULL)
        return 1;

    chromsym_graph_free(g);
    chromsym_poset_free(p);
    return 0;
}
