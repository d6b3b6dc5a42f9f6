#include <stdio.h>
#include <string.h>

#include "spherecert.h"

static int check(int ok, const char *what) {
    if (!ok) {
        fprintf(stderr, "failed: %s\n", what);
    }
    return ok ? 0 : 1;
}

int main(void) {
    int bad = 0;
    int64_t e4[8] = {0, 0, 0, 0, 1, 0, 0, 0};
    int64_t e5[8] = {0, 0, 0, 0, 0, 1, 0, 0};
    int64_t ones[8] = {1, 1, 1, 1, 1, 1, 1, 1};
    SpherecertElement *a = NULL, *b = NULL, *p = NULL;
    char *s = NULL;

    bad += check(spherecert_element_new(e4, ones, 8, &a) == SPHERECERT_STATUS_OK, "new e4");
    bad += check(spherecert_element_new(e5, ones, 8, &b) == SPHERECERT_STATUS_OK, "new e5");
    bad += check(spherecert_element_mul(a, b, &p) == SPHERECERT_STATUS_OK, "mul");
    bad += check(spherecert_element_coeff(p, 1, &s) == SPHERECERT_STATUS_OK && strcmp(s, "1/1") == 0, "e4*e5 = e1");
    spherecert_string_free(s);
    spherecert_element_free(a);
    spherecert_element_free(b);
    spherecert_element_free(p);

    SpherecertReport *r = NULL;
    size_t total = 0, failed = 0;
    bad += check(spherecert_run_suite("algebra", 3, 0, &r) == SPHERECERT_STATUS_OK, "run algebra");
    bad += check(spherecert_report_summary(r, &total, NULL, &failed) == SPHERECERT_STATUS_OK, "summary");
    bad += check(total > 64 && failed == 0, "algebra passes");
    bad += check(spherecert_report_exit_code(r) == 0, "exit code");
    spherecert_report_free(r);

    bad += check(spherecert_run_suite("nope", 3, 0, &r) == SPHERECERT_STATUS_UNKNOWN_SUITE, "unknown suite");
    bad += check(strcmp(spherecert_status_message(SPHERECERT_STATUS_UNKNOWN_TABLE), "unknown table kind") == 0, "message");

    bad += check(spherecert_emit_table("oct-mult", &s) == SPHERECERT_STATUS_OK && strncmp(s, ",e0,e1", 6) == 0, "table");
    spherecert_string_free(s);
    return bad;
}
