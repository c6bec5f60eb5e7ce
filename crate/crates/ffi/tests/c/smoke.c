#include <stdio.h>
#include "tlj.h"

int main(void) {
    TljEngine *e = NULL;
    if (tlj_engine_new("tl", "laurent:d", "standard", NULL, &e) != TLJ_STATUS_OK) return 1;
    size_t dim = 0;
    if (tlj_engine_end_dim(e, "||||", &dim) != TLJ_STATUS_OK || dim != 14) return 2;
    TljVector *id = NULL, *sq = NULL;
    if (tlj_vector_identity(e, "|||", &id) != TLJ_STATUS_OK) return 3;
    if (tlj_vector_compose(e, id, id, &sq) != TLJ_STATUS_OK) return 4;
    int eq = 0;
    if (tlj_vector_equal(id, sq, &eq) != TLJ_STATUS_OK || !eq) return 5;
    if (tlj_engine_new("tl", "nonsense", "standard", NULL, &e) != TLJ_STATUS_PARSE) return 6;
    if (tlj_last_error() == NULL) return 7;
    tlj_vector_free(sq);
    tlj_vector_free(id);
    tlj_engine_free(e);
    printf("ok\n");
    return 0;
}
