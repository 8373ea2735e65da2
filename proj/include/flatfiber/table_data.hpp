// Rows of the co-Seifert classification tables 2-18.
// table, row, IT, fiber, fiber line, group, quotient, quotient line, actions, pair
#pragma once

namespace flatfiber::table_data {

struct Row {
  int table, row, it;
  const char *fiber, *fiber_line, *group, *quotient, *quotient_line, *actions, *pair;
};

inline constexpr Row rows[] = {
    {2, 1, 183, "∗632", "O", "C1", "∗632", "O", "idt.,idt.", "idt., idt."},
    {2, 2, 191, "∗632", "I", "C1", "∗632", "I", "idt.,idt.", "idt., idt."},
    {3, 1, 168, "632", "O", "C1", "632", "O", "idt.,idt.", "idt., idt."},
    {3, 2, 175, "632", "I", "C1", "632", "I", "idt.,idt.", "idt., idt."},
    {3, 3, 177, "632", "O", "C2", "∗632", "I", "c-ref.,ref.", "c-ref., c-ref."},
    {3, 4, 184, "632", "O", "C2", "∗632", "O", "c-ref.,2-rot.", "c-ref., c-ref."},
    {3, 5, 192, "632", "I", "C2", "∗632", "I", "c-ref.,ref.", "idt., c-ref."},
    {4, 1, 157, "3∗3", "O", "C1", "3∗3", "O", "idt.,idt.", "idt., idt."},
    {4, 2, 162, "3∗3", "O", "C2", "∗632", "I", "c-ref.,ref.", "c-ref., c-ref."},
    {4, 3, 185, "3∗3", "O", "C2", "∗632", "O", "c-ref.,2-rot.", "c-ref., c-ref."},
    {4, 4, 189, "3∗3", "I", "C1", "3∗3", "I", "idt.,idt.", "idt., idt."},
    {4, 5, 193, "3∗3", "I", "C2", "∗632", "I", "c-ref.,ref.", "idt., c-ref."},
    {5, 1, 156, "∗333", "O", "C1", "∗333", "O", "idt.,idt.", "idt., idt."},
    {5, 2, 160, "∗333", "O", "C3", "3∗3", "O", "3-rot.,3-rot.", "3-rot., 3-rot.^-1"},
    {5, 3, 164, "∗333", "O", "C2", "∗632", "I", "t-ref.,ref.", "t-ref., t-ref."},
    {5, 4, 166, "∗333", "O", "D3", "∗632", "I", "t-ref.,ref.;3-rot.,3-rot.", "t-ref., t-ref.′"},
    {5, 5, 186, "∗333", "O", "C2", "∗632", "O", "t-ref.,2-rot.", "t-ref., t-ref."},
    {5, 6, 187, "∗333", "I", "C1", "∗333", "I", "idt.,idt.", "idt., idt."},
    {5, 7, 194, "∗333", "I", "C2", "∗632", "I", "t-ref.,ref.", "idt., t-ref."},
    {6, 1, 143, "333", "O", "C1", "333", "O", "idt.,idt.", "idt., idt."},
    {6, 2, 146, "333", "O", "C3", "333", "O", "3-rot.,3-rot.", "3-rot., 3-rot.^-1"},
    {6, 3, 147, "333", "O", "C2", "632", "I", "2-rot.,ref.", "2-rot., 2-rot."},
    {6, 4, 148, "333", "O", "D3", "632", "I", "2-rot.,ref.;3-rot.,3-rot.", "2-rot., 2-rot.′"},
    {6, 5, 149, "333", "O", "C2", "∗333", "I", "c-ref.,ref.", "c-ref., c-ref."},
    {6, 6, 150, "333", "O", "C2", "3∗3", "I", "t-ref.,ref.", "t-ref., t-ref."},
    {6, 7, 155, "333", "O", "D3", "∗333", "I", "t-ref.,ref.;3-rot.,3-rot.", "t-ref., t-ref.′"},
    {6, 8, 158, "333", "O", "C2", "∗333", "O", "c-ref.,2-rot.", "c-ref., c-ref."},
    {6, 9, 159, "333", "O", "C2", "3∗3", "O", "t-ref.,2-rot.", "t-ref., t-ref."},
    {6, 10, 161, "333", "O", "C6", "3∗3", "O", "6-sym.,6-rot.", "6-sym., 6-sym.^-1"},
    {6, 11, 163, "333", "O", "D2", "∗632", "I", "c-ref.,ref.;t-ref.,2-rot.", "c-ref., 2-rot."},
    {6, 12, 165, "333", "O", "D2", "∗632", "I", "t-ref.,ref.;c-ref.,2-rot.", "t-ref., 2-rot."},
    {6, 13, 167, "333", "O", "D6", "∗632", "I", "t-ref.,ref.;6-sym.,6-rot.", "t-ref., 2-rot.′"},
    {6, 14, 173, "333", "O", "C2", "632", "O", "2-rot.,2-rot.", "2-rot., 2-rot."},
    {6, 15, 174, "333", "I", "C1", "333", "I", "idt.,idt.", "idt., idt."},
    {6, 16, 176, "333", "I", "C2", "632", "I", "2-rot.,ref.", "idt., 2-rot."},
    {6, 17, 182, "333", "O", "D2", "∗632", "I", "c-ref.,ref.;2-rot.,2-rot.", "c-ref., t-ref."},
    {6, 18, 188, "333", "I", "C2", "∗333", "I", "c-ref.,ref.", "idt., c-ref."},
    {6, 19, 190, "333", "I", "C2", "3∗3", "I", "t-ref.,ref.", "idt., t-ref."},
    {7, 1, 100, "4∗2", "O", "C1", "4∗2", "O", "idt.,idt.", "idt., idt."},
    {7, 2, 108, "4∗2", "O", "C2", "∗442", "O", "c-ref.,2-rot.", "c-ref., c-ref."},
    {7, 3, 125, "4∗2", "O", "C2", "∗442", "I", "c-ref.,ref.", "c-ref., c-ref."},
    {7, 4, 127, "4∗2", "I", "C1", "4∗2", "I", "idt.,idt.", "idt., idt."},
    {7, 5, 140, "4∗2", "I", "C2", "∗442", "I", "c-ref.,ref.", "idt., c-ref."},
    {8, 1, 99, "∗442", "O", "C1", "∗442", "O", "idt.,idt.", "idt., idt."},
    {8, 2, 107, "∗442", "O", "C2", "∗442", "O", "t-ref.,2-rot.", "t-ref., t-ref."},
    {8, 3, 123, "∗442", "I", "C1", "∗442", "I", "idt.,idt.", "idt., idt."},
    {8, 4, 129, "∗442", "O", "C2", "∗442", "I", "t-ref.,ref.", "t-ref., t-ref."},
    {8, 5, 139, "∗442", "I", "C2", "∗442", "I", "t-ref.,ref.", "idt., t-ref."},
    {9, 1, 75, "442", "O", "C1", "442", "O", "idt.,idt.", "idt., idt."},
    {9, 2, 79, "442", "O", "C2", "442", "O", "2-rot.,2-rot.", "2-rot., 2-rot."},
    {9, 3, 83, "442", "I", "C1", "442", "I", "idt.,idt.", "idt., idt."},
    {9, 4, 85, "442", "O", "C2", "442", "I", "2-rot.,ref.", "2-rot., 2-rot."},
    {9, 5, 87, "442", "I", "C2", "442", "I", "2-rot.,ref.", "idt., 2-rot."},
    {9, 6, 89, "442", "O", "C2", "∗442", "I", "c-ref.,ref.", "c-ref., c-ref."},
    {9, 7, 90, "442", "O", "C2", "4∗2", "I", "t-ref.,ref.", "t-ref., t-ref."},
    {9, 8, 97, "442", "O", "D2", "∗442", "I", "c-ref.,ref.;2-rot.,2-rot.", "c-ref., t-ref."},
    {9, 9, 103, "442", "O", "C2", "∗442", "O", "c-ref.,2-rot.", "c-ref., c-ref."},
    {9, 10, 104, "442", "O", "C2", "4∗2", "O", "t-ref.,2-rot.", "t-ref., t-ref."},
    {9, 11, 124, "442", "I", "C2", "∗442", "I", "c-ref.,ref.", "idt., c-ref."},
    {9, 12, 126, "442", "O", "D2", "∗442", "I", "c-ref.,ref.;t-ref.,2-rot.", "c-ref., 2-rot."},
    {9, 13, 128, "442", "I", "C2", "4∗2", "I", "t-ref.,ref.", "idt., t-ref."},
    {9, 14, 130, "442", "O", "D2", "∗442", "I", "t-ref.,ref.;c-ref.,2-rot.", "t-ref., 2-rot."},
    {10, 1, 35, "2∗22", "O", "C1", "2∗22", "O", "idt.,idt.", "idt., idt."},
    {10, 2, 42, "2∗22", "O", "C2", "∗2222", "O", "c-ref.,2-rot.", "c-ref., c-ref."},
    {10, 3, 65, "2∗22", "I", "C1", "2∗22", "I", "idt.,idt.", "idt., idt."},
    {10, 4, 67, "2∗22", "O", "C2", "∗2222", "I", "c-ref.,ref.", "c-ref., c-ref."},
    {10, 5, 69, "2∗22", "I", "C2", "∗2222", "I", "c-ref.,ref.", "idt., c-ref."},
    {10, 6, 101, "2∗22", "O", "C2", "∗442", "O", "d-ref.,2-rot.", "d-ref., d-ref."},
    {10, 7, 102, "2∗22", "O", "C2", "4∗2", "O", "2-rot.,2-rot.", "2-rot., 2-rot."},
    {10, 8, 111, "2∗22", "O", "C2", "∗442", "I", "d-ref.,ref.", "d-ref., d-ref."},
    {10, 9, 113, "2∗22", "O", "C2", "4∗2", "I", "2-rot.,ref.", "2-rot., 2-rot."},
    {10, 10, 121, "2∗22", "O", "D2", "∗442", "I", "d-ref.,ref.;c-ref.,2-rot.", "d-ref., 2-rot."},
    {10, 11, 132, "2∗22", "I", "C2", "∗442", "I", "d-ref.,ref.", "idt., d-ref."},
    {10, 12, 134, "2∗22", "O", "D2", "∗442", "I", "c-ref.,ref.;2-rot.,2-rot.", "c-ref., d-ref."},
    {10, 13, 136, "2∗22", "I", "C2", "4∗2", "I", "2-rot.,ref.", "idt., 2-rot."},
    {10, 14, 138, "2∗22", "O", "D2", "∗442", "I", "c-ref.,ref.;d-ref.,2-rot.", "c-ref., 2-rot."},
    {11, 1, 32, "22×", "O", "C1", "22×", "O", "idt.,idt.", "idt., idt."},
    {11, 2, 41, "22×", "O", "C2", "22∗", "O", "m-ref.,2-rot.", "m-ref., m-ref."},
    {11, 3, 45, "22×", "O", "C2", "2∗22", "O", "2-rot.,2-rot.", "2-rot., 2-rot."},
    {11, 4, 50, "22×", "O", "C2", "2∗22", "I", "2-rot.,ref.", "2-rot., 2-rot."},
    {11, 5, 54, "22×", "O", "C2", "22∗", "I", "m-ref.,ref.", "m-ref., m-ref."},
    {11, 6, 55, "22×", "I", "C1", "22×", "I", "idt.,idt.", "idt., idt."},
    {11, 7, 64, "22×", "I", "C2", "22∗", "I", "m-ref.,ref.", "idt., m-ref."},
    {11, 8, 68, "22×", "O", "D2", "∗2222", "I", "m-ref.,ref.;m-ref.′,2-rot.", "m-ref., 2-rot."},
    {11, 9, 72, "22×", "I", "C2", "2∗22", "I", "2-rot.,ref.", "idt., 2-rot."},
    {11, 10, 73, "22×", "O", "D2", "∗2222", "I", "m-ref.,ref.;2-rot.,2-rot.", "m-ref., m-ref.′"},
    {11, 11, 106, "22×", "O", "C2", "4∗2", "O", "d-ref.,2-rot.", "d-ref., d-ref."},
    {11, 12, 110, "22×", "O", "C4", "4∗2", "O", "4-rot.,4-rot.", "4-rot., 4-rot.^-1"},
    {11, 13, 117, "22×", "O", "C2", "4∗2", "I", "d-ref.,ref.", "d-ref., d-ref."},
    {11, 14, 120, "22×", "O", "D2", "∗442", "I", "d-ref.,ref.;2-rot.,2-rot.", "d-ref., d-ref.′"},
    {11, 15, 133, "22×", "O", "D2", "∗442", "I", "d-ref.,ref.;d-ref.′,2-rot.", "d-ref., 2-rot."},
    {11, 16, 135, "22×", "I", "C2", "4∗2", "I", "d-ref.,ref.", "idt., d-ref."},
    {11, 17, 142, "22×", "O", "D4", "∗442", "I", "d-ref.,ref.;4-rot.,4-rot.", "d-ref., m-ref."},
    {12, 1, 28, "22∗", "O", "C1", "22∗", "O", "idt.,idt.", "idt., idt."},
    {12, 2, 39, "22∗", "O", "C2", "∗2222", "O", "c-ref.,2-rot.", "c-ref., c-ref."},
    {12, 3, 40, "22∗", "O", "C2", "22∗", "O", "2-rot.,2-rot.", "2-rot., 2-rot."},
    {12, 4, 46, "22∗", "O", "C2", "2∗22", "O", "m-ref.,2-rot.", "m-ref., m-ref."},
    {12, 5, 49, "22∗", "O", "C2", "∗2222", "I", "c-ref.,ref.", "c-ref., c-ref."},
    {12, 6, 51, "22∗", "I", "C1", "22∗", "I", "idt.,idt.", "idt., idt."},
    {12, 7, 53, "22∗", "O", "C2", "2∗22", "I", "m-ref.,ref.", "m-ref., m-ref."},
    {12, 8, 57, "22∗", "O", "C2", "22∗", "I", "2-rot.,ref.", "2-rot., 2-rot."},
    {12, 9, 63, "22∗", "I", "C2", "22∗", "I", "2-rot.,ref.", "idt., 2-rot."},
    {12, 10, 64, "22∗", "O", "D2", "∗2222", "I", "m-ref.,ref.;c-ref.,2-rot.", "m-ref., 2-rot."},
    {12, 11, 66, "22∗", "O", "D2", "∗2222", "I", "c-ref.,ref.;2-rot.,2-rot.", "c-ref., m-ref."},
    {12, 12, 67, "22∗", "I", "C2", "∗2222", "I", "c-ref.,ref.", "idt., c-ref."},
    {12, 13, 72, "22∗", "O", "D2", "∗2222", "I", "c-ref.,ref.;m-ref.,2-rot.", "c-ref., 2-rot."},
    {12, 14, 74, "22∗", "I", "C2", "2∗22", "I", "m-ref.,ref.", "idt., m-ref."},
    {13, 1, 25, "∗2222", "O", "C1", "∗2222", "O", "idt.,idt.", "idt., idt."},
    {13, 2, 38, "∗2222", "O", "C2", "∗2222", "O", "m-ref.,2-rot.", "m-ref., m-ref."},
    {13, 3, 44, "∗2222", "O", "C2", "2∗22", "O", "2-rot.,2-rot.", "2-rot., 2-rot."},
    {13, 4, 47, "∗2222", "I", "C1", "∗2222", "I", "idt.,idt.", "idt., idt."},
    {13, 5, 51, "∗2222", "O", "C2", "∗2222", "I", "m-ref.,ref.", "m-ref., m-ref."},
    {13, 6, 59, "∗2222", "O", "C2", "2∗22", "I", "2-rot.,ref.", "2-rot., 2-rot."},
    {13, 7, 63, "∗2222", "O", "D2", "∗2222", "I", "m-ref.,ref.;m-ref.′,2-rot.", "m-ref., 2-rot."},
    {13, 8, 65, "∗2222", "I", "C2", "∗2222", "I", "m-ref.,ref.", "idt., m-ref."},
    {13, 9, 71, "∗2222", "I", "C2", "2∗22", "I", "2-rot.,ref.", "idt., 2-rot."},
    {13, 10, 74, "∗2222", "O", "D2", "∗2222", "I", "m-ref.,ref.;2-rot.,2-rot.", "m-ref., m-ref.′"},
    {13, 11, 105, "∗2222", "O", "C2", "∗442", "O", "d-ref.,2-rot.", "d-ref., d-ref."},
    {13, 12, 109, "∗2222", "O", "C4", "4∗2", "O", "4-rot.,4-rot.", "4-rot., 4-rot.^-1"},
    {13, 13, 115, "∗2222", "O", "C2", "∗442", "I", "d-ref.,ref.", "d-ref., d-ref."},
    {13, 14, 119, "∗2222", "O", "D2", "∗442", "I", "d-ref.,ref.;2-rot.,2-rot.", "d-ref., d-ref.′"},
    {13, 15, 131, "∗2222", "I", "C2", "∗442", "I", "d-ref.,ref.", "idt., d-ref."},
    {13, 16, 137, "∗2222", "O", "D2", "∗442", "I", "d-ref.,ref.;d-ref.′,2-rot.", "d-ref., 2-rot."},
    {13, 17, 141, "∗2222", "O", "D4", "∗442", "I", "d-ref.,ref.;4-rot.,4-rot.", "d-ref., m-ref."},
    {14, 1, 8, "∗×", "O", "C1", "∗×", "O", "idt.,idt.", "idt., idt."},
    {14, 2, 12, "∗×", "O", "C2", "2∗22", "I", "2-rot.,ref.", "2-rot., 2-rot."},
    {14, 3, 36, "∗×", "O", "C2", "2∗22", "O", "2-rot.,2-rot.", "2-rot., 2-rot."},
    {14, 4, 38, "∗×", "I", "C1", "∗×", "I", "idt.,idt.", "idt., idt."},
    {14, 5, 39, "∗×", "O", "C2", "∗∗", "I", "c-ref.,ref.", "c-ref., c-ref."},
    {14, 6, 42, "∗×", "I", "C2", "∗∗", "I", "c-ref.,ref.", "idt., c-ref."},
    {14, 7, 63, "∗×", "I", "C2", "2∗22", "I", "2-rot.,ref.", "idt., 2-rot."},
    {14, 8, 64, "∗×", "O", "D2", "∗2222", "I", "2-rot.,ref.;2-rot.′,2-rot.", "2-rot., c-ref."},
    {15, 1, 7, "××", "O", "C1", "××", "O", "idt.,idt.", "idt., idt."},
    {15, 2, 9, "××", "O", "C2", "××", "O", "2-sym.,2-rot.", "2-sym., 2-sym."},
    {15, 3, 13, "××", "O", "C2", "22∗", "I", "v-ref.,ref.", "v-ref., v-ref."},
    {15, 4, 14, "××", "O", "C2", "22×", "I", "2-rot.,ref.", "2-rot., 2-rot."},
    {15, 5, 15, "××", "O", "D2", "22∗", "I", "v-ref.,ref.;2-sym.,2-rot.", "v-ref., 2-rot.′"},
    {15, 6, 26, "××", "I", "C1", "××", "I", "idt.,idt.", "idt., idt."},
    {15, 7, 27, "××", "O", "C2", "∗∗", "I", "m-ref.,ref.", "m-ref., m-ref."},
    {15, 8, 29, "××", "O", "C2", "××", "I", "2-sym.,ref.", "2-sym., 2-sym."},
    {15, 9, 29, "××", "O", "C2", "22∗", "O", "v-ref.,2-rot.", "v-ref., v-ref."},
    {15, 10, 30, "××", "O", "C2", "∗×", "I", "c-ref.,ref.", "c-ref., c-ref."},
    {15, 11, 33, "××", "O", "C2", "22×", "O", "2-rot.,2-rot.", "2-rot., 2-rot."},
    {15, 12, 36, "××", "I", "C2", "××", "I", "2-sym.,ref.", "idt., 2-sym."},
    {15, 13, 37, "××", "O", "D2", "∗∗", "I", "m-ref.,ref.;2-sym.,2-rot.", "m-ref., c-ref."},
    {15, 14, 39, "××", "I", "C2", "∗∗", "I", "m-ref.,ref.", "idt., m-ref."},
    {15, 15, 41, "××", "O", "D2", "∗∗", "I", "c-ref.,ref.;m-ref.,2-rot.", "c-ref., 2-sym."},
    {15, 16, 45, "××", "O", "D2", "∗∗", "I", "m-ref.,ref.;c-ref.,2-rot.", "m-ref., 2-sym."},
    {15, 17, 46, "××", "I", "C2", "∗×", "I", "c-ref.,ref.", "idt., c-ref."},
    {15, 18, 52, "××", "O", "D2", "2∗22", "I", "c-ref.,ref.;2-rot.,2-rot.", "c-ref., v-ref."},
    {15, 19, 54, "××", "O", "D2", "∗2222", "I", "m-ref.,ref.;v-ref.′,2-rot.", "m-ref., v-ref."},
    {15, 20, 56, "××", "O", "D2", "22∗", "I", "m-ref.,ref.;2-rot.′,2-rot.", "m-ref., 2-rot."},
    {15, 21, 57, "××", "I", "C2", "22∗", "I", "v-ref.,ref.", "idt., v-ref."},
    {15, 22, 60, "××", "O", "D2", "22∗", "I", "2-sym.,ref.;2-rot.′,2-rot.", "2-sym., v-ref."},
    {15, 23, 60, "××", "O", "D2", "2∗22", "I", "c-ref.,ref.;v-ref.,2-rot.", "c-ref., 2-rot."},
    {15, 24, 61, "××", "O", "D2", "22∗", "I", "2-sym.,ref.;v-ref.,2-rot.", "2-sym., 2-rot.′"},
    {15, 25, 62, "××", "I", "C2", "22×", "I", "2-rot.,ref.", "idt., 2-rot."},
    {16, 1, 6, "∗∗", "O", "C1", "∗∗", "O", "idt.,idt.", "idt., idt."},
    {16, 2, 8, "∗∗", "O", "C2", "∗∗", "O", "c-ref.,2-rot.", "c-ref., c-ref."},
    {16, 3, 10, "∗∗", "O", "C2", "∗2222", "I", "v-ref.,ref.", "v-ref., v-ref."},
    {16, 4, 11, "∗∗", "O", "C2", "22∗", "I", "2-rot.,ref.", "2-rot., 2-rot."},
    {16, 5, 12, "∗∗", "O", "D2", "∗2222", "I", "v-ref.,ref.;c-ref.,2-rot.", "v-ref., 2-rot."},
    {16, 6, 25, "∗∗", "I", "C1", "∗∗", "I", "idt.,idt.", "idt., idt."},
    {16, 7, 26, "∗∗", "O", "C2", "∗∗", "I", "2-sym.,ref.", "2-sym., 2-sym."},
    {16, 8, 26, "∗∗", "O", "C2", "∗2222", "O", "v-ref.,2-rot.", "v-ref., v-ref."},
    {16, 9, 28, "∗∗", "O", "C2", "∗∗", "I", "c-ref.,ref.", "c-ref., c-ref."},
    {16, 10, 31, "∗∗", "O", "C2", "∗×", "I", "g-ref.,ref.", "g-ref., g-ref."},
    {16, 11, 31, "∗∗", "O", "C2", "22∗", "O", "2-rot.,2-rot.", "2-rot., 2-rot."},
    {16, 12, 35, "∗∗", "I", "C2", "∗∗", "I", "c-ref.,ref.", "idt., c-ref."},
    {16, 13, 36, "∗∗", "O", "D2", "∗∗", "I", "2-sym.,ref.;c-ref.,2-rot.", "2-sym., g-ref."},
    {16, 14, 38, "∗∗", "I", "C2", "∗∗", "I", "2-sym.,ref.", "idt., 2-sym."},
    {16, 15, 40, "∗∗", "O", "D2", "∗∗", "I", "c-ref.,ref.;2-sym.,2-rot.", "c-ref., g-ref."},
    {16, 16, 44, "∗∗", "I", "C2", "∗×", "I", "g-ref.,ref.", "idt., g-ref."},
    {16, 17, 46, "∗∗", "O", "D2", "∗∗", "I", "c-ref.,ref.;g-ref.,2-rot.", "c-ref., 2-sym."},
    {16, 18, 51, "∗∗", "I", "C2", "∗2222", "I", "v-ref.,ref.", "idt., v-ref."},
    {16, 19, 53, "∗∗", "O", "D2", "∗2222", "I", "v-ref.,ref.;2-rot.,2-rot.", "v-ref., c-ref."},
    {16, 20, 55, "∗∗", "O", "D2", "∗2222", "I", "2-sym.,ref.;v-ref.′,2-rot.", "2-sym., v-ref."},
    {16, 21, 57, "∗∗", "O", "D2", "∗2222", "I", "c-ref.,ref.;v-ref.,2-rot.", "c-ref., 2-rot."},
    {16, 22, 58, "∗∗", "O", "D2", "2∗22", "I", "g-ref.,ref.;2-rot.′,2-rot.", "g-ref., v-ref."},
    {16, 23, 59, "∗∗", "I", "C2", "22∗", "I", "2-rot.,ref.", "idt., 2-rot."},
    {16, 24, 62, "∗∗", "O", "D2", "22∗", "I", "2-sym.,ref.;2-rot.′,2-rot.", "2-sym., 2-rot."},
    {16, 25, 62, "∗∗", "O", "D2", "2∗22", "I", "g-ref.,ref.;v-ref.,2-rot.", "g-ref., 2-rot.′"},
    {17, 1, 3, "2222", "O", "C1", "2222", "O", "idt.,idt.", "idt., idt."},
    {17, 2, 5, "2222", "O", "C2", "2222", "O", "m-rot.,2-rot.", "m-rot., m-rot"},
    {17, 3, 10, "2222", "I", "C1", "2222", "I", "idt.,idt.", "idt., idt."},
    {17, 4, 12, "2222", "I", "C2", "2222", "I", "m-rot.,ref.", "idt., m-rot"},
    {17, 5, 13, "2222", "O", "C2", "2222", "I", "m-rot.,ref.", "m-rot., m-rot"},
    {17, 6, 15, "2222", "O", "D2", "2222", "I", "c-rot.,ref.;m-rot.′,2-rot.", "c-rot, m-rot."},
    {17, 7, 16, "2222", "O", "C2", "∗2222", "I", "c-ref.,ref.", "c-ref., c-ref."},
    {17, 8, 17, "2222", "O", "C2", "22∗", "I", "m-ref.,ref.", "m-ref., m-ref."},
    {17, 9, 18, "2222", "O", "C2", "22×", "I", "2-sym.,ref.", "2-sym., 2-sym."},
    {17, 10, 20, "2222", "O", "D2", "22∗", "I", "2-sym.,ref.;m-rot.′,2-rot.", "2-sym., m-ref."},
    {17, 11, 21, "2222", "O", "C2", "2∗22", "I", "d-ref.,ref.", "d-ref., d-ref."},
    {17, 12, 21, "2222", "O", "D2", "∗2222", "I", "c-ref.,ref.;m-rot.,2-rot.", "c-ref., m-ref."},
    {17, 13, 22, "2222", "O", "D2", "∗2222", "I", "d-ref.,ref.;c-rot.,2-rot.", "d-ref., d-ref.′"},
    {17, 14, 23, "2222", "O", "D2", "2∗22", "I", "c-ref.,ref.;c-rot.,2-rot.", "c-ref., 2-sym."},
    {17, 15, 24, "2222", "O", "D2", "2∗22", "I", "m-ref.,ref.;c-rot.,2-rot.", "m-ref., m-ref.′"},
    {17, 16, 27, "2222", "O", "C2", "∗2222", "O", "c-ref.,2-rot.", "c-ref., c-ref."},
    {17, 17, 30, "2222", "O", "C2", "22∗", "O", "m-ref.,2-rot.", "m-ref., m-ref."},
    {17, 18, 34, "2222", "O", "C2", "22×", "O", "2-sym.,2-rot.", "2-sym., 2-sym."},
    {17, 19, 37, "2222", "O", "C2", "2∗22", "O", "d-ref.,2-rot.", "d-ref., d-ref."},
    {17, 20, 43, "2222", "O", "C4", "22×", "O", "4-sym.,4-rot.", "4-sym., 4-sym.^-1"},
    {17, 21, 48, "2222", "O", "D2", "2∗22", "I", "c-rot.,ref.;2-sym.,2-rot.", "c-rot., c-ref."},
    {17, 22, 49, "2222", "I", "C2", "∗2222", "I", "c-ref.,ref.", "idt., c-ref."},
    {17, 23, 50, "2222", "O", "D2", "∗2222", "I", "c-ref.,ref.;m-ref.,2-rot.", "c-ref., m-rot."},
    {17, 24, 52, "2222", "O", "D2", "22∗", "I", "m-ref.,ref.;2-sym.,2-rot.", "m-ref., m-rot.′"},
    {17, 25, 52, "2222", "O", "D2", "2∗22", "I", "c-rot.,ref.;m-ref.′,2-rot.", "c-rot., m-ref."},
    {17, 26, 53, "2222", "I", "C2", "22∗", "I", "m-ref.,ref.", "idt., m-ref."},
    {17, 27, 54, "2222", "O", "D2", "∗2222", "I", "m-ref.,ref.;c-ref.,2-rot.", "m-ref., m-rot."},
    {17, 28, 56, "2222", "O", "D2", "2∗22", "I", "c-rot.,ref.;c-ref.,2-rot.", "c-rot., 2-sym."},
    {17, 29, 58, "2222", "I", "C2", "22×", "I", "2-sym.,ref.", "idt., 2-sym."},
    {17, 30, 60, "2222", "O", "D2", "22∗", "I", "2-sym.,ref.;m-ref.,2-rot.", "2-sym., m-rot.′"},
    {17, 31, 66, "2222", "I", "C2", "2∗22", "I", "d-ref.,ref.", "idt., d-ref."},
    {17, 32, 68, "2222", "O", "D2", "∗2222", "I", "c-rot.,ref.;d-ref.′,2-rot.", "c-rot., d-ref."},
    {17, 33, 70, "2222", "O", "D4", "2∗22", "I", "m-rot.,ref.;4-sym.,4-rot.", "m-rot., d-ref."},
    {17, 34, 77, "2222", "O", "C2", "442", "O", "d-rot.,2-rot.", "d-rot., d-rot."},
    {17, 35, 80, "2222", "O", "C4", "442", "O", "4-rot.,4-rot.", "4-rot., 4-rot.^-1"},
    {17, 36, 81, "2222", "O", "C2", "442", "I", "d-rot.,ref.", "d-rot., d-rot."},
    {17, 37, 82, "2222", "O", "D2", "442", "I", "d-rot.,ref.;c-rot.,2-rot.", "d-rot., d-rot.′"},
    {17, 38, 84, "2222", "I", "C2", "442", "I", "d-rot.,ref.", "idt., d-rot."},
    {17, 39, 86, "2222", "O", "D2", "442", "I", "c-rot.,ref.;d-rot.′,2-rot.", "c-rot., d-rot."},
    {17, 40, 88, "2222", "O", "D4", "442", "I", "m-rot.,ref.;4-rot.,4-rot.", "m-rot., d-rot."},
    {17, 41, 93, "2222", "O", "D2", "∗442", "I", "c-ref.,ref.;d-rot.,2-rot.", "c-ref., d-ref."},
    {17, 42, 94, "2222", "O", "D2", "4∗2", "I", "2-sym.,ref.;d-rot.′,2-rot.", "2-sym., d-ref."},
    {17, 43, 98, "2222", "O", "D4", "∗442", "I", "m-ref.,ref.;4-rot.,4-rot.", "m-ref, d-ref."},
    {17, 44, 112, "2222", "O", "D2", "∗442", "I", "c-ref.,ref.;d-ref.,2-rot.", "c-ref., d-rot."},
    {17, 45, 114, "2222", "O", "D2", "4∗2", "I", "2-sym.,ref.;d-ref.,2-rot.", "2-sym, d-rot.′"},
    {17, 46, 116, "2222", "O", "D2", "∗442", "I", "d-ref.,ref.;c-ref.,2-rot.", "d-ref., d-rot."},
    {17, 47, 118, "2222", "O", "D2", "4∗2", "I", "d-ref.,ref.;2-sym.,2-rot.", "d-ref., d-rot.′"},
    {17, 48, 122, "2222", "O", "D4", "4∗2", "I", "m-ref.,ref.;4-sym.,4-rot.", "m-ref., d-rot."},
    {17, 49, 171, "2222", "O", "C3", "632", "O", "3-rot.,3-rot.", "3-aff., 3-aff.^-1"},
    {17, 50, 180, "2222", "O", "D3", "∗632", "I", "ref.,ref.;3-rot.,3-rot.", "d-ref., 2-aff."},
    {18, 1, 1, "∘", "O", "C1", "∘", "O", "idt.,idt.", "idt., idt."},
    {18, 2, 2, "∘", "O", "C2", "2222", "I", "2-rot.,ref.", "2-rot., 2-rot."},
    {18, 3, 3, "∘", "O", "C2", "∗∗", "I", "v-ref.,ref.", "v-ref., v-ref."},
    {18, 4, 4, "∘", "O", "C2", "××", "I", "h-grf.,ref.", "h-grf., h-grf."},
    {18, 5, 4, "∘", "O", "C2", "2222", "O", "2-rot.,2-rot.", "2-rot., 2-rot."},
    {18, 6, 5, "∘", "O", "C2", "∗×", "I", "e-ref.,ref.", "e-ref., e-ref."},
    {18, 7, 5, "∘", "O", "D2", "∗∗", "I", "v-ref.,ref.;h-rot.,2-rot.", "v-ref., h-grf."},
    {18, 8, 6, "∘", "I", "C1", "∘", "I", "idt.,idt.", "idt., idt."},
    {18, 9, 7, "∘", "O", "C2", "∘", "I", "v-rot.,ref.", "v-rot., v-rot"},
    {18, 10, 7, "∘", "O", "C2", "∗∗", "O", "v-ref.,2-rot.", "v-ref., v-ref."},
    {18, 11, 8, "∘", "I", "C2", "∘", "I", "h-rot.,ref.", "idt., h-rot"},
    {18, 12, 9, "∘", "O", "D2", "∘", "I", "v-rot.,ref.;h-rot.,2-rot.", "v-rot, 2-sym."},
    {18, 13, 9, "∘", "O", "C2", "∗×", "O", "d-ref.,2-rot.", "d-ref., d-ref."},
    {18, 14, 11, "∘", "I", "C2", "2222", "I", "2-rot.,ref.", "idt., 2-rot."},
    {18, 15, 13, "∘", "O", "D2", "∗2222", "I", "h-ref.,ref.;v-ref.,2-rot.", "h-ref., 2-rot."},
    {18, 16, 14, "∘", "O", "D2", "2222", "I", "v-rot.,ref.;2-rot.′,2-rot.", "v-rot., 2-rot."},
    {18, 17, 14, "∘", "O", "D2", "22∗", "I", "v-grf.,ref.;v-ref.′,2-rot.", "v-grf., 2-rot."},
    {18, 18, 15, "∘", "O", "D2", "2∗22", "I", "e-ref.,ref.;d-ref.,2-rot.", "e-ref., 2-rot."},
    {18, 19, 17, "∘", "O", "D2", "∗2222", "I", "v-ref.,ref.;2-rot.,2-rot.", "v-ref., h-ref."},
    {18, 20, 18, "∘", "O", "D2", "22∗", "I", "h-grf.,ref.;2-rot.',2-rot.", "h-grf., h-ref."},
    {18, 21, 19, "∘", "O", "D2", "22×", "I", "v-grf.,ref.;2-rot.″,2-rot.", "v-grf., h-grf."},
    {18, 22, 20, "∘", "O", "D2", "2∗22", "I", "d-ref.,ref.;2-rot.,2-rot.", "d-ref., e-ref."},
    {18, 23, 28, "∘", "I", "C2", "∗∗", "I", "h-ref.,ref.", "idt., h-ref."},
    {18, 24, 29, "∘", "O", "D2", "∗∗", "I", "v-rot.,ref.;h-ref.,2-rot.", "v-rot., v-grf."},
    {18, 25, 30, "∘", "O", "D2", "∗∗", "I", "v-rot.,ref.;v-grf.,2-rot.", "v-rot., h-ref."},
    {18, 26, 31, "∘", "I", "C2", "××", "I", "v-grf.,ref.", "idt., v-grf."},
    {18, 27, 32, "∘", "O", "D2", "∗∗", "I", "h-rot.,ref.;h-ref.',2-rot.", "h-rot., h-ref."},
    {18, 28, 33, "∘", "O", "D2", "××", "I", "h-rot.,ref.;v-grf.',2-rot.", "h-rot., v-grf."},
    {18, 29, 33, "∘", "O", "D2", "∗×", "I", "2-sym.,ref.;h-ref.,2-rot.", "2-sym., v-grf.'"},
    {18, 30, 34, "∘", "O", "D2", "∗×", "I", "2-sym.,ref.;v-grf.,2-rot.", "2-sym., h-ref.'"},
    {18, 31, 40, "∘", "I", "C2", "∗×", "I", "e-ref.,ref.", "idt., e-ref."},
    {18, 32, 41, "∘", "O", "D2", "∗∗", "I", "e-ref.″,ref.;e-ref.,2-rot.", "e-ref.″, 2-sym."},
    {18, 33, 43, "∘", "O", "D4", "∗×", "I", "v-rot.,ref.;4-sym.,4-rot.", "v-rot., d-ref."},
    {18, 34, 76, "∘", "O", "C4", "442", "O", "4-rot.,4-rot.", "4-rot., 4-rot.^-1"},
    {18, 35, 91, "∘", "O", "D4", "∗442", "I", "h-ref.,ref.;4-rot.,4-rot.", "h-ref., d-ref."},
    {18, 36, 92, "∘", "O", "D4", "4∗2", "I", "v-grf.,ref.;4-rot.′,4-rot.", "v-grf., d-ref."},
    {18, 37, 144, "∘", "O", "C3", "333", "O", "3-rot.,3-rot.", "3-aff., 3-aff.^-1"},
    {18, 38, 151, "∘", "O", "D3", "∗333", "I", "l-ref.,ref.;3-rot.,3-rot.", "d-ref., n-aff."},
    {18, 39, 152, "∘", "O", "D3", "3∗3", "I", "m-ref.,ref.;3-rot.,3-rot.", "m-aff., e-ref."},
    {18, 40, 169, "∘", "O", "C6", "632", "O", "6-rot.,6-rot.", "6-aff., 6-aff.^-1"},
    {18, 41, 178, "∘", "O", "D6", "∗632", "I", "l-ref.,ref.;6-rot.,6-rot.", "d-ref., m-aff."},
};

}  // namespace flatfiber::table_data
