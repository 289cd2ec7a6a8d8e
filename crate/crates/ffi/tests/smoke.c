#include <stdio.h>

#include "stern_ffi.h"

int main(void) {
    SternRowHandle *row = NULL;
    if (stern_row_new(4, &row) != STERN_STATUS_OK) {
        fprintf(stderr, "stern_row_new: %s\n", stern_last_error_message());
        return 1;
    }
    uintptr_t len = 0;
    stern_row_len(row, &len);
    printf("row 4:");
    for (uintptr_t k = 1; k <= len; k++) {
        uint64_t v = 0;
        stern_row_entry(row, k, &v);
        printf(" %llu", (unsigned long long)v);
    }
    printf("\n");
    stern_row_free(row);

    SternMatrixHandle *m = NULL;
    char *text = NULL;
    if (stern_phi_matrix(3, true, &m) != STERN_STATUS_OK ||
        stern_matrix_to_string(m, &text) != STERN_STATUS_OK) {
        fprintf(stderr, "phi: %s\n", stern_last_error_message());
        return 1;
    }
    printf("phi_sym 3: %s\n", text);
    stern_string_free(text);
    stern_matrix_free(m);

    SternStatus s = stern_row_new(0, &row);
    printf("row 0: status %d\n", (int)s);
    return s == STERN_STATUS_INVALID_ARGUMENT ? 0 : 1;
}
