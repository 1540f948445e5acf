/* The public header must compile as C. */
#include <stdio.h>

#include "quivext/quivext.h"

int main(void) {
    qx_run_options opts;
    qx_problem* p = NULL;
    qx_status st;
    qx_run_options_init(&opts);
    st = qx_problem_load_string("{\"schema_version\": \"1\", \"quiver\": {\"vertices\": [\"1\"]}}", &p);
    if (st != QX_OK) {
        fprintf(stderr, "%s: %s\n", qx_status_name(st), qx_last_error());
        return 1;
    }
    qx_problem_free(p);
    printf("quivext %s\n", qx_version());
    return 0;
}
