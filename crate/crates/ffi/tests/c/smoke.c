#include <stdio.h>
#include <string.h>

#include "vsasm.h"

static int fail(const char *what) {
    fprintf(stderr, "%s: %s\n", what, vsasm_last_error());
    return 1;
}

int main(void) {
    VsasmPoly *brute = NULL, *pairs = NULL;
    if (vsasm_gf("brute", 2, &brute) != VSASM_STATUS_OK) return fail("brute");
    if (vsasm_gf("pairs", 2, &pairs) != VSASM_STATUS_OK) return fail("pairs");
    bool eq = false;
    if (vsasm_poly_equal(brute, pairs, &eq) != VSASM_STATUS_OK || !eq) return fail("equal");

    char *count = NULL;
    if (vsasm_count(3, NULL, 0, &count) != VSASM_STATUS_OK) return fail("count");
    int ok = strcmp(count, "26") == 0;
    vsasm_string_free(count);

    VsasmPoly *none = NULL;
    if (vsasm_gf("nope", 2, &none) != VSASM_STATUS_PARSE || none != NULL) return fail("error code");

    vsasm_poly_free(brute);
    vsasm_poly_free(pairs);
    printf("%s\n", ok ? "ok" : "bad count");
    return ok ? 0 : 1;
}
