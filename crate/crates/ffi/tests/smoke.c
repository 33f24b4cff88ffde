#include <stdio.h>
#include <string.h>

#include "plscl.h"

#define CHECK(cond)                                                         \
    do {                                                                    \
        if (!(cond)) {                                                      \
            fprintf(stderr, "%s:%d: %s (%s)\n", __FILE__, __LINE__, #cond,  \
                    plscl_last_error_message());                            \
            return 1;                                                       \
        }                                                                   \
    } while (0)

static const char *GENS =
    "{\"a\": {\"breakpoints\": [[\"0\",\"0\"], [\"1/4\",\"1/4\"], [\"3/8\",\"1/2\"], [\"5/8\",\"5/8\"], [\"1\",\"1\"]]},"
    " \"b\": {\"breakpoints\": [[\"0\",\"0\"], [\"3/8\",\"3/8\"], [\"7/16\",\"1/2\"], [\"1/2\",\"9/16\"], [\"5/8\",\"5/8\"], [\"1\",\"1\"]]}}";
static const char *EXPR =
    "{\"target\": [[\"a\",1],[\"b\",1],[\"a\",-1],[\"b\",-1]], \"pairs\": [[[[\"a\",1]], [[\"b\",1]]]]}";

int main(void) {
    PlsclMap *x0 = NULL, *sq = NULL;
    char *value = NULL;
    CHECK(plscl_thompson_generator(0, &x0) == PLSCL_STATUS_OK);
    CHECK(plscl_map_power(x0, 2, &sq) == PLSCL_STATUS_OK);
    CHECK(plscl_map_eval(sq, "5/8", &value) == PLSCL_STATUS_OK);
    CHECK(strcmp(value, "3/16") == 0);
    plscl_string_free(value);
    CHECK(plscl_map_eval(sq, "2", &value) == PLSCL_STATUS_DOMAIN_ERROR);
    CHECK(strlen(plscl_last_error_message()) > 0);
    plscl_map_free(sq);
    plscl_map_free(x0);

    PlsclCertificate *cert = NULL;
    char *bound = NULL;
    CHECK(plscl_certify(GENS, EXPR, "[[\"x0\",2]]", 49, 6, &cert) == PLSCL_STATUS_OK);
    CHECK(plscl_certificate_verify(cert) == PLSCL_STATUS_OK);
    CHECK(plscl_certificate_bound(cert, &bound) == PLSCL_STATUS_OK);
    CHECK(strcmp(bound, "1/25") == 0);
    plscl_string_free(bound);
    plscl_certificate_free(cert);

    puts("ok");
    return 0;
}
