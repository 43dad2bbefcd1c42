#include <stdio.h>
#include <string.h>

#include "sparsehs.h"

#define CHECK(cond)                                                        \
  do {                                                                     \
    if (!(cond)) {                                                         \
      fprintf(stderr, "line %d: %s (%s)\n", __LINE__, #cond,              \
              shs_last_error() ? shs_last_error() : "no error");           \
      return 1;                                                            \
    }                                                                      \
  } while (0)

int main(void) {
  /* F = {{0,1},{1,2}}, B = {{0,1,2}}: vertex 1 alone is optimal. */
  size_t f_offsets[] = {0, 2, 4};
  size_t f_data[] = {0, 1, 1, 2};
  size_t b_offsets[] = {0, 3};
  size_t b_data[] = {0, 1, 2};
  ShsInstance *inst = NULL;
  CHECK(shs_instance_new(3, f_offsets, f_data, 2, b_offsets, b_data, 1, &inst) == SHS_STATUS_OK);

  ShsVertexSet *sol = NULL;
  uint64_t nodes = 0;
  CHECK(shs_solve_exact(inst, 1000000, &sol, &nodes) == SHS_STATUS_OK);
  size_t buf[4];
  CHECK(shs_vertex_set_copy(sol, buf, 4) == 1 && buf[0] == 1);
  CHECK(shs_vertex_set_value(sol) == 1);
  shs_vertex_set_free(sol);
  shs_instance_free(inst);

  ShsGraph *c4 = NULL;
  CHECK(shs_graph_from_edge_list("4 4\n0 1 1/1\n1 2 1/1\n2 3 1/1\n3 0 1/1\n", &c4) == SHS_STATUS_OK);
  size_t hd = 0;
  CHECK(shs_highway_dimension(c4, &hd) == SHS_STATUS_OK && hd == 2);

  size_t all_offsets[] = {0, 4};
  size_t all[] = {0, 1, 2, 3};
  sol = NULL;
  CHECK(shs_sparse_vc_k1(c4, all_offsets, all, 1, &sol) == SHS_STATUS_INFEASIBLE);
  CHECK(sol == NULL && shs_last_error() != NULL);
  shs_graph_free(c4);

  CHECK(shs_graph_from_edge_list("2 1\n0 7 1/1\n", &c4) == SHS_STATUS_INPUT_ERROR);
  printf("ok %s\n", shs_version());
  return 0;
}
