#pragma once

namespace seidelcert {

// Identical to data/catalog.tsv; a test keeps the two in sync.
inline constexpr const char* kBuiltinCatalog = R"TSV(padding.At+2	At+(2)	min_padding=41
padding.At+3	At+(3)	min_padding=67
padding.At+4	At+(4)	min_padding=97
padding.At+5	At+(5)	min_padding=130
padding.At+6	At+(6)	min_padding=165
padding.At+7	At+(7)	min_padding=201
padding.K211	K(2,1,1)	min_padding=11
padding.K4	K(4)	min_padding=5
padding.K23	K(2,3)	min_padding=19
padding.K15	K(1,5)	min_padding=41
padding.Dt+4	Dt+(4)	min_padding=137
padding.Dt+5	Dt+(5)	min_padding=225
padding.Dt+6	Dt+(6)	min_padding=327
padding.Dt+7	Dt+(7)	min_padding=439
padding.Dt+8	Dt+(8)	min_padding=557
padding.Et+6	Et+(6)	min_padding=465
padding.Et+7	Et+(7)	min_padding=966
padding.Et+8	Et+(8)	min_padding=2477
minimal.B1_14	B1 + iso(14)	minimal_forbidden
minimal.B2_9	B2 + iso(9)	minimal_forbidden
minimal.K114_2K2	K(1,14) + 2*K(2)	minimal_forbidden
minimal.K23_P4_K2	K(2,3) + P(4) + K(2)	minimal_forbidden
minimal.K16_P4_K2	K(1,6) + P(4) + K(2)	minimal_forbidden
minimal.B3_P4_K2	B3 + P(4) + K(2)	minimal_forbidden
minimal.K23_K13_K2	K(2,3) + K(1,3) + K(2)	minimal_forbidden
minimal.K16_K13_K2	K(1,6) + K(1,3) + K(2)	minimal_forbidden
minimal.B3_K13_K2	B3 + K(1,3) + K(2)	minimal_forbidden
)TSV";

}  // namespace seidelcert
