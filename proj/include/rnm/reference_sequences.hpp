#ifndef RNM_REFERENCE_SEQUENCES_HPP
#define RNM_REFERENCE_SEQUENCES_HPP

namespace rnm {

// Bundled reference list of all possible move sequences starting with an
// inside contraction, with the parameter intervals on which each occurs.
inline const char* reference_sequences_text = R"REF({5} possible for s in {{0.999999, 1.00001}}
{5, 6} possible for s in {{0.999999, 1.00001}}
{6} possible for s in {{0.582145, 1.}}
{6, 2} possible for s in {{0.582145, 0.737035}}
{6, 2, 1} possible for s in {{0.582145, 0.695708}}
{6, 2, 1, 3} possible for s in {{0.582145, 0.654949}}
{6, 2, 1, 3, 2} possible for s in {{0.582145, 0.654949}}
{6, 2, 1, 3, 6} possible for s in {{0.582145, 0.654949}}
{6, 2, 1, 3, 6, 2} possible for s in {{0.616769, 0.654949}}
{6, 2, 1, 3, 6, 2, 5} possible for s in {{0.616769, 0.64706}}
{6, 2, 1, 3, 6, 8} possible for s in {{0.582145, 0.64706}}
{6, 2, 1, 3, 6, 8, 4} possible for s in {{0.582145, 0.623495}}
{6, 2, 1, 3, 9} possible for s in {{0.582145, 0.644579}}
{6, 2, 1, 6} possible for s in {{0.582145, 0.695708}}
{6, 2, 1, 9} possible for s in {{0.582145, 0.673138}}
{6, 2, 1, 9, 2} possible for s in {{0.616769, 0.673138}}
{6, 2, 1, 9, 2, 5} possible for s in {{0.616769, 0.64706}}
{6, 2, 1, 9, 8} possible for s in {{0.582145, 0.64706}}
{6, 2, 1, 9, 8, 4} possible for s in {{0.582145, 0.623495}}
{6, 2, 5} possible for s in {{0.582145, 0.737035}}
{6, 2, 5, 4} possible for s in {{0.582145, 0.695708}}
{6, 2, 5, 7} possible for s in {{0.582145, 0.681931}}
{6, 2, 5, 7, 6} possible for s in {{0.582145, 0.635866}}
{6, 2, 5, 7, 9} possible for s in {{0.582145, 0.681931}}
{6, 2, 5, 7, 9, 5} possible for s in {{0.582145, 0.679967}}
{6, 2, 5, 7, 9, 8} possible for s in {{0.582145, 0.663254}}
{6, 2, 5, 7, 9, 8, 4} possible for s in {{0.582145, 0.646912}}
{6, 2, 5, 7, 9, 8, 7} possible for s in {{0.582145, 0.663254}}
{6, 2, 5, 7, 9, 8, 7, 6} possible for s in {{0.582145, 0.663254}}
{6, 2, 5, 7, 9, 8, 7, 6, 5} possible for s in {{0.589537, 0.663254}}
{6, 2, 5, 7, 9, 8, 7, 6, 5, 1} possible for s in {{0.589537, 0.635373}}
{6, 2, 5, 7, 9, 8, 7, 9} possible for s in {{0.582145, 0.65445}}
{6, 2, 5, 7, 9, 8, 7, 9, 5} possible for s in {{0.582145, 0.651784}}
{6, 2, 5, 7, 9, 8, 7, 9, 5, 4} possible for s in {{0.582145, 0.651784}}
{6, 2, 5, 7, 9, 8, 7, 9, 5, 4, 3} possible for s in {{0.582145, 0.651784}}
{6, 2, 5, 7, 9, 8, 7, 9, 8} possible for s in {{0.597869, 0.65445}}
{6, 2, 5, 7, 9, 8, 7, 9, 8, 4} possible for s in {{0.597869, 0.65445}}
{6, 2, 5, 7, 9, 8, 7, 9, 8, 4, 6} possible for s in {{0.597869, 0.65445}}
{6, 2, 5, 7, 9, 8, 7, 9, 8, 4, 6, 2} possible for s in {{0.597869, 0.654004}}
{6, 2, 5, 7, 9, 8, 7, 9, 8, 4, 6, 2, 5} possible for s in {{0.64094, 0.654004}}
{6, 2, 5, 7, 9, 8, 7, 9, 8, 4, 6, 8} possible for s in {{0.64094, 0.65445}}
{6, 2, 8} possible for s in {{0.582145, 0.614711}}
{6, 5} possible for s in {{0.582145, 1.}}
{6, 8} possible for s in {{0.582145, 0.853944}}
{6, 8, 4} possible for s in {{0.582145, 0.810502}}
{6, 8, 7} possible for s in {{0.582145, 0.853944}}
{6, 8, 7, 6} possible for s in {{0.582145, 0.853944}}
{6, 8, 7, 9} possible for s in {{0.582145, 0.818183}}
{6, 8, 7, 9, 5} possible for s in {{0.582145, 0.811611}}
{6, 8, 7, 9, 8} possible for s in {{0.582145, 0.818183}}
{6, 8, 7, 9, 8, 4} possible for s in {{0.582145, 0.818183}}
{6, 8, 7, 9, 8, 4, 6} possible for s in {{0.763168, 0.818183}}
{6, 8, 7, 9, 8, 4, 6, 2} possible for s in {{0.763168, 0.817831}}
{6, 8, 7, 9, 8, 7} possible for s in {{0.582145, 0.777853}}
{6, 8, 7, 9, 8, 7, 6} possible for s in {{0.582145, 0.777853}}
{6, 8, 7, 9, 8, 7, 6, 5} possible for s in {{0.589537, 0.777853}}
{6, 8, 7, 9, 8, 7, 6, 5, 1} possible for s in {{0.589537, 0.777853}}
{6, 8, 7, 9, 8, 7, 9} possible for s in {{0.582145, 0.751661}}
{6, 8, 7, 9, 8, 7, 9, 5} possible for s in {{0.582145, 0.751661}}
{6, 8, 7, 9, 8, 7, 9, 5, 4} possible for s in {{0.582145, 0.751661}}
{6, 8, 7, 9, 8, 7, 9, 5, 4, 3} possible for s in {{0.582145, 0.751661}}
{6, 8, 7, 9, 8, 7, 9, 8} possible for s in {{0.597869, 0.694824}}
{6, 8, 7, 9, 8, 7, 9, 8, 4} possible for s in {{0.597869, 0.694824}}
{6, 8, 7, 9, 8, 7, 9, 8, 4, 6} possible for s in {{0.597869, 0.694824}}
{6, 8, 7, 9, 8, 7, 9, 8, 4, 6, 2} possible for s in {{0.597869, 0.694824}}
{6, 8, 7, 9, 8, 7, 9, 8, 4, 6, 2, 5} possible for s in {{0.64094, 0.663616}}
{6, 8, 7, 9, 8, 7, 9, 8, 4, 6, 8} possible for s in {{0.64094, 0.663616}}
)REF";

}  // namespace rnm

#endif  // RNM_REFERENCE_SEQUENCES_HPP
