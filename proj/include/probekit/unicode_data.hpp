// Generated by scripts/gen_unicode_tables.py -- do not edit by hand.
#pragma once

#include <cstdint>

namespace probekit::unicode_data {

struct MappedChar { uint32_t cp; const char* replacement; };
struct Range { uint32_t lo; uint32_t hi; };

inline constexpr MappedChar kLowercase[1168] = {
    {0x0041, "\x61"},
    {0x0042, "\x62"},
    {0x0043, "\x63"},
    {0x0044, "\x64"},
    {0x0045, "\x65"},
    {0x0046, "\x66"},
    {0x0047, "\x67"},
    {0x0048, "\x68"},
    {0x0049, "\x69"},
    {0x004A, "\x6a"},
    {0x004B, "\x6b"},
    {0x004C, "\x6c"},
    {0x004D, "\x6d"},
    {0x004E, "\x6e"},
    {0x004F, "\x6f"},
    {0x0050, "\x70"},
    {0x0051, "\x71"},
    {0x0052, "\x72"},
    {0x0053, "\x73"},
    {0x0054, "\x74"},
    {0x0055, "\x75"},
    {0x0056, "\x76"},
    {0x0057, "\x77"},
    {0x0058, "\x78"},
    {0x0059, "\x79"},
    {0x005A, "\x7a"},
    {0x00C0, "\xc3\xa0"},
    {0x00C1, "\xc3\xa1"},
    {0x00C2, "\xc3\xa2"},
    {0x00C3, "\xc3\xa3"},
    {0x00C4, "\xc3\xa4"},
    {0x00C5, "\xc3\xa5"},
    {0x00C6, "\xc3\xa6"},
    {0x00C7, "\xc3\xa7"},
    {0x00C8, "\xc3\xa8"},
    {0x00C9, "\xc3\xa9"},
    {0x00CA, "\xc3\xaa"},
    {0x00CB, "\xc3\xab"},
    {0x00CC, "\xc3\xac"},
    {0x00CD, "\xc3\xad"},
    {0x00CE, "\xc3\xae"},
    {0x00CF, "\xc3\xaf"},
    {0x00D0, "\xc3\xb0"},
    {0x00D1, "\xc3\xb1"},
    {0x00D2, "\xc3\xb2"},
    {0x00D3, "\xc3\xb3"},
    {0x00D4, "\xc3\xb4"},
    {0x00D5, "\xc3\xb5"},
    {0x00D6, "\xc3\xb6"},
    {0x00D8, "\xc3\xb8"},
    {0x00D9, "\xc3\xb9"},
    {0x00DA, "\xc3\xba"},
    {0x00DB, "\xc3\xbb"},
    {0x00DC, "\xc3\xbc"},
    {0x00DD, "\xc3\xbd"},
    {0x00DE, "\xc3\xbe"},
    {0x0100, "\xc4\x81"},
    {0x0102, "\xc4\x83"},
    {0x0104, "\xc4\x85"},
    {0x0106, "\xc4\x87"},
    {0x0108, "\xc4\x89"},
    {0x010A, "\xc4\x8b"},
    {0x010C, "\xc4\x8d"},
    {0x010E, "\xc4\x8f"},
    {0x0110, "\xc4\x91"},
    {0x0112, "\xc4\x93"},
    {0x0114, "\xc4\x95"},
    {0x0116, "\xc4\x97"},
    {0x0118, "\xc4\x99"},
    {0x011A, "\xc4\x9b"},
    {0x011C, "\xc4\x9d"},
    {0x011E, "\xc4\x9f"},
    {0x0120, "\xc4\xa1"},
    {0x0122, "\xc4\xa3"},
    {0x0124, "\xc4\xa5"},
    {0x0126, "\xc4\xa7"},
    {0x0128, "\xc4\xa9"},
    {0x012A, "\xc4\xab"},
    {0x012C, "\xc4\xad"},
    {0x012E, "\xc4\xaf"},
    {0x0130, "\x69\xcc\x87"},
    {0x0132, "\xc4\xb3"},
    {0x0134, "\xc4\xb5"},
    {0x0136, "\xc4\xb7"},
    {0x0139, "\xc4\xba"},
    {0x013B, "\xc4\xbc"},
    {0x013D, "\xc4\xbe"},
    {0x013F, "\xc5\x80"},
    {0x0141, "\xc5\x82"},
    {0x0143, "\xc5\x84"},
    {0x0145, "\xc5\x86"},
    {0x0147, "\xc5\x88"},
    {0x014A, "\xc5\x8b"},
    {0x014C, "\xc5\x8d"},
    {0x014E, "\xc5\x8f"},
    {0x0150, "\xc5\x91"},
    {0x0152, "\xc5\x93"},
    {0x0154, "\xc5\x95"},
    {0x0156, "\xc5\x97"},
    {0x0158, "\xc5\x99"},
    {0x015A, "\xc5\x9b"},
    {0x015C, "\xc5\x9d"},
    {0x015E, "\xc5\x9f"},
    {0x0160, "\xc5\xa1"},
    {0x0162, "\xc5\xa3"},
    {0x0164, "\xc5\xa5"},
    {0x0166, "\xc5\xa7"},
    {0x0168, "\xc5\xa9"},
    {0x016A, "\xc5\xab"},
    {0x016C, "\xc5\xad"},
    {0x016E, "\xc5\xaf"},
    {0x0170, "\xc5\xb1"},
    {0x0172, "\xc5\xb3"},
    {0x0174, "\xc5\xb5"},
    {0x0176, "\xc5\xb7"},
    {0x0178, "\xc3\xbf"},
    {0x0179, "\xc5\xba"},
    {0x017B, "\xc5\xbc"},
    {0x017D, "\xc5\xbe"},
    {0x0181, "\xc9\x93"},
    {0x0182, "\xc6\x83"},
    {0x0184, "\xc6\x85"},
    {0x0186, "\xc9\x94"},
    {0x0187, "\xc6\x88"},
    {0x0189, "\xc9\x96"},
    {0x018A, "\xc9\x97"},
    {0x018B, "\xc6\x8c"},
    {0x018E, "\xc7\x9d"},
    {0x018F, "\xc9\x99"},
    {0x0190, "\xc9\x9b"},
    {0x0191, "\xc6\x92"},
    {0x0193, "\xc9\xa0"},
    {0x0194, "\xc9\xa3"},
    {0x0196, "\xc9\xa9"},
    {0x0197, "\xc9\xa8"},
    {0x0198, "\xc6\x99"},
    {0x019C, "\xc9\xaf"},
    {0x019D, "\xc9\xb2"},
    {0x019F, "\xc9\xb5"},
    {0x01A0, "\xc6\xa1"},
    {0x01A2, "\xc6\xa3"},
    {0x01A4, "\xc6\xa5"},
    {0x01A6, "\xca\x80"},
    {0x01A7, "\xc6\xa8"},
    {0x01A9, "\xca\x83"},
    {0x01AC, "\xc6\xad"},
    {0x01AE, "\xca\x88"},
    {0x01AF, "\xc6\xb0"},
    {0x01B1, "\xca\x8a"},
    {0x01B2, "\xca\x8b"},
    {0x01B3, "\xc6\xb4"},
    {0x01B5, "\xc6\xb6"},
    {0x01B7, "\xca\x92"},
    {0x01B8, "\xc6\xb9"},
    {0x01BC, "\xc6\xbd"},
    {0x01C4, "\xc7\x86"},
    {0x01C5, "\xc7\x86"},
    {0x01C7, "\xc7\x89"},
    {0x01C8, "\xc7\x89"},
    {0x01CA, "\xc7\x8c"},
    {0x01CB, "\xc7\x8c"},
    {0x01CD, "\xc7\x8e"},
    {0x01CF, "\xc7\x90"},
    {0x01D1, "\xc7\x92"},
    {0x01D3, "\xc7\x94"},
    {0x01D5, "\xc7\x96"},
    {0x01D7, "\xc7\x98"},
    {0x01D9, "\xc7\x9a"},
    {0x01DB, "\xc7\x9c"},
    {0x01DE, "\xc7\x9f"},
    {0x01E0, "\xc7\xa1"},
    {0x01E2, "\xc7\xa3"},
    {0x01E4, "\xc7\xa5"},
    {0x01E6, "\xc7\xa7"},
    {0x01E8, "\xc7\xa9"},
    {0x01EA, "\xc7\xab"},
    {0x01EC, "\xc7\xad"},
    {0x01EE, "\xc7\xaf"},
    {0x01F1, "\xc7\xb3"},
    {0x01F2, "\xc7\xb3"},
    {0x01F4, "\xc7\xb5"},
    {0x01F6, "\xc6\x95"},
    {0x01F7, "\xc6\xbf"},
    {0x01F8, "\xc7\xb9"},
    {0x01FA, "\xc7\xbb"},
    {0x01FC, "\xc7\xbd"},
    {0x01FE, "\xc7\xbf"},
    {0x0200, "\xc8\x81"},
    {0x0202, "\xc8\x83"},
    {0x0204, "\xc8\x85"},
    {0x0206, "\xc8\x87"},
    {0x0208, "\xc8\x89"},
    {0x020A, "\xc8\x8b"},
    {0x020C, "\xc8\x8d"},
    {0x020E, "\xc8\x8f"},
    {0x0210, "\xc8\x91"},
    {0x0212, "\xc8\x93"},
    {0x0214, "\xc8\x95"},
    {0x0216, "\xc8\x97"},
    {0x0218, "\xc8\x99"},
    {0x021A, "\xc8\x9b"},
    {0x021C, "\xc8\x9d"},
    {0x021E, "\xc8\x9f"},
    {0x0220, "\xc6\x9e"},
    {0x0222, "\xc8\xa3"},
    {0x0224, "\xc8\xa5"},
    {0x0226, "\xc8\xa7"},
    {0x0228, "\xc8\xa9"},
    {0x022A, "\xc8\xab"},
    {0x022C, "\xc8\xad"},
    {0x022E, "\xc8\xaf"},
    {0x0230, "\xc8\xb1"},
    {0x0232, "\xc8\xb3"},
    {0x023A, "\xe2\xb1\xa5"},
    {0x023B, "\xc8\xbc"},
    {0x023D, "\xc6\x9a"},
    {0x023E, "\xe2\xb1\xa6"},
    {0x0241, "\xc9\x82"},
    {0x0243, "\xc6\x80"},
    {0x0244, "\xca\x89"},
    {0x0245, "\xca\x8c"},
    {0x0246, "\xc9\x87"},
    {0x0248, "\xc9\x89"},
    {0x024A, "\xc9\x8b"},
    {0x024C, "\xc9\x8d"},
    {0x024E, "\xc9\x8f"},
    {0x0370, "\xcd\xb1"},
    {0x0372, "\xcd\xb3"},
    {0x0376, "\xcd\xb7"},
    {0x037F, "\xcf\xb3"},
    {0x0386, "\xce\xac"},
    {0x0388, "\xce\xad"},
    {0x0389, "\xce\xae"},
    {0x038A, "\xce\xaf"},
    {0x038C, "\xcf\x8c"},
    {0x038E, "\xcf\x8d"},
    {0x038F, "\xcf\x8e"},
    {0x0391, "\xce\xb1"},
    {0x0392, "\xce\xb2"},
    {0x0393, "\xce\xb3"},
    {0x0394, "\xce\xb4"},
    {0x0395, "\xce\xb5"},
    {0x0396, "\xce\xb6"},
    {0x0397, "\xce\xb7"},
    {0x0398, "\xce\xb8"},
    {0x0399, "\xce\xb9"},
    {0x039A, "\xce\xba"},
    {0x039B, "\xce\xbb"},
    {0x039C, "\xce\xbc"},
    {0x039D, "\xce\xbd"},
    {0x039E, "\xce\xbe"},
    {0x039F, "\xce\xbf"},
    {0x03A0, "\xcf\x80"},
    {0x03A1, "\xcf\x81"},
    {0x03A3, "\xcf\x83"},
    {0x03A4, "\xcf\x84"},
    {0x03A5, "\xcf\x85"},
    {0x03A6, "\xcf\x86"},
    {0x03A7, "\xcf\x87"},
    {0x03A8, "\xcf\x88"},
    {0x03A9, "\xcf\x89"},
    {0x03AA, "\xcf\x8a"},
    {0x03AB, "\xcf\x8b"},
    {0x03CF, "\xcf\x97"},
    {0x03D8, "\xcf\x99"},
    {0x03DA, "\xcf\x9b"},
    {0x03DC, "\xcf\x9d"},
    {0x03DE, "\xcf\x9f"},
    {0x03E0, "\xcf\xa1"},
    {0x03E2, "\xcf\xa3"},
    {0x03E4, "\xcf\xa5"},
    {0x03E6, "\xcf\xa7"},
    {0x03E8, "\xcf\xa9"},
    {0x03EA, "\xcf\xab"},
    {0x03EC, "\xcf\xad"},
    {0x03EE, "\xcf\xaf"},
    {0x03F4, "\xce\xb8"},
    {0x03F7, "\xcf\xb8"},
    {0x03F9, "\xcf\xb2"},
    {0x03FA, "\xcf\xbb"},
    {0x03FD, "\xcd\xbb"},
    {0x03FE, "\xcd\xbc"},
    {0x03FF, "\xcd\xbd"},
    {0x0400, "\xd1\x90"},
    {0x0401, "\xd1\x91"},
    {0x0402, "\xd1\x92"},
    {0x0403, "\xd1\x93"},
    {0x0404, "\xd1\x94"},
    {0x0405, "\xd1\x95"},
    {0x0406, "\xd1\x96"},
    {0x0407, "\xd1\x97"},
    {0x0408, "\xd1\x98"},
    {0x0409, "\xd1\x99"},
    {0x040A, "\xd1\x9a"},
    {0x040B, "\xd1\x9b"},
    {0x040C, "\xd1\x9c"},
    {0x040D, "\xd1\x9d"},
    {0x040E, "\xd1\x9e"},
    {0x040F, "\xd1\x9f"},
    {0x0410, "\xd0\xb0"},
    {0x0411, "\xd0\xb1"},
    {0x0412, "\xd0\xb2"},
    {0x0413, "\xd0\xb3"},
    {0x0414, "\xd0\xb4"},
    {0x0415, "\xd0\xb5"},
    {0x0416, "\xd0\xb6"},
    {0x0417, "\xd0\xb7"},
    {0x0418, "\xd0\xb8"},
    {0x0419, "\xd0\xb9"},
    {0x041A, "\xd0\xba"},
    {0x041B, "\xd0\xbb"},
    {0x041C, "\xd0\xbc"},
    {0x041D, "\xd0\xbd"},
    {0x041E, "\xd0\xbe"},
    {0x041F, "\xd0\xbf"},
    {0x0420, "\xd1\x80"},
    {0x0421, "\xd1\x81"},
    {0x0422, "\xd1\x82"},
    {0x0423, "\xd1\x83"},
    {0x0424, "\xd1\x84"},
    {0x0425, "\xd1\x85"},
    {0x0426, "\xd1\x86"},
    {0x0427, "\xd1\x87"},
    {0x0428, "\xd1\x88"},
    {0x0429, "\xd1\x89"},
    {0x042A, "\xd1\x8a"},
    {0x042B, "\xd1\x8b"},
    {0x042C, "\xd1\x8c"},
    {0x042D, "\xd1\x8d"},
    {0x042E, "\xd1\x8e"},
    {0x042F, "\xd1\x8f"},
    {0x0460, "\xd1\xa1"},
    {0x0462, "\xd1\xa3"},
    {0x0464, "\xd1\xa5"},
    {0x0466, "\xd1\xa7"},
    {0x0468, "\xd1\xa9"},
    {0x046A, "\xd1\xab"},
    {0x046C, "\xd1\xad"},
    {0x046E, "\xd1\xaf"},
    {0x0470, "\xd1\xb1"},
    {0x0472, "\xd1\xb3"},
    {0x0474, "\xd1\xb5"},
    {0x0476, "\xd1\xb7"},
    {0x0478, "\xd1\xb9"},
    {0x047A, "\xd1\xbb"},
    {0x047C, "\xd1\xbd"},
    {0x047E, "\xd1\xbf"},
    {0x0480, "\xd2\x81"},
    {0x048A, "\xd2\x8b"},
    {0x048C, "\xd2\x8d"},
    {0x048E, "\xd2\x8f"},
    {0x0490, "\xd2\x91"},
    {0x0492, "\xd2\x93"},
    {0x0494, "\xd2\x95"},
    {0x0496, "\xd2\x97"},
    {0x0498, "\xd2\x99"},
    {0x049A, "\xd2\x9b"},
    {0x049C, "\xd2\x9d"},
    {0x049E, "\xd2\x9f"},
    {0x04A0, "\xd2\xa1"},
    {0x04A2, "\xd2\xa3"},
    {0x04A4, "\xd2\xa5"},
    {0x04A6, "\xd2\xa7"},
    {0x04A8, "\xd2\xa9"},
    {0x04AA, "\xd2\xab"},
    {0x04AC, "\xd2\xad"},
    {0x04AE, "\xd2\xaf"},
    {0x04B0, "\xd2\xb1"},
    {0x04B2, "\xd2\xb3"},
    {0x04B4, "\xd2\xb5"},
    {0x04B6, "\xd2\xb7"},
    {0x04B8, "\xd2\xb9"},
    {0x04BA, "\xd2\xbb"},
    {0x04BC, "\xd2\xbd"},
    {0x04BE, "\xd2\xbf"},
    {0x04C0, "\xd3\x8f"},
    {0x04C1, "\xd3\x82"},
    {0x04C3, "\xd3\x84"},
    {0x04C5, "\xd3\x86"},
    {0x04C7, "\xd3\x88"},
    {0x04C9, "\xd3\x8a"},
    {0x04CB, "\xd3\x8c"},
    {0x04CD, "\xd3\x8e"},
    {0x04D0, "\xd3\x91"},
    {0x04D2, "\xd3\x93"},
    {0x04D4, "\xd3\x95"},
    {0x04D6, "\xd3\x97"},
    {0x04D8, "\xd3\x99"},
    {0x04DA, "\xd3\x9b"},
    {0x04DC, "\xd3\x9d"},
    {0x04DE, "\xd3\x9f"},
    {0x04E0, "\xd3\xa1"},
    {0x04E2, "\xd3\xa3"},
    {0x04E4, "\xd3\xa5"},
    {0x04E6, "\xd3\xa7"},
    {0x04E8, "\xd3\xa9"},
    {0x04EA, "\xd3\xab"},
    {0x04EC, "\xd3\xad"},
    {0x04EE, "\xd3\xaf"},
    {0x04F0, "\xd3\xb1"},
    {0x04F2, "\xd3\xb3"},
    {0x04F4, "\xd3\xb5"},
    {0x04F6, "\xd3\xb7"},
    {0x04F8, "\xd3\xb9"},
    {0x04FA, "\xd3\xbb"},
    {0x04FC, "\xd3\xbd"},
    {0x04FE, "\xd3\xbf"},
    {0x0500, "\xd4\x81"},
    {0x0502, "\xd4\x83"},
    {0x0504, "\xd4\x85"},
    {0x0506, "\xd4\x87"},
    {0x0508, "\xd4\x89"},
    {0x050A, "\xd4\x8b"},
    {0x050C, "\xd4\x8d"},
    {0x050E, "\xd4\x8f"},
    {0x0510, "\xd4\x91"},
    {0x0512, "\xd4\x93"},
    {0x0514, "\xd4\x95"},
    {0x0516, "\xd4\x97"},
    {0x0518, "\xd4\x99"},
    {0x051A, "\xd4\x9b"},
    {0x051C, "\xd4\x9d"},
    {0x051E, "\xd4\x9f"},
    {0x0520, "\xd4\xa1"},
    {0x0522, "\xd4\xa3"},
    {0x0524, "\xd4\xa5"},
    {0x0526, "\xd4\xa7"},
    {0x0528, "\xd4\xa9"},
    {0x052A, "\xd4\xab"},
    {0x052C, "\xd4\xad"},
    {0x052E, "\xd4\xaf"},
    {0x0531, "\xd5\xa1"},
    {0x0532, "\xd5\xa2"},
    {0x0533, "\xd5\xa3"},
    {0x0534, "\xd5\xa4"},
    {0x0535, "\xd5\xa5"},
    {0x0536, "\xd5\xa6"},
    {0x0537, "\xd5\xa7"},
    {0x0538, "\xd5\xa8"},
    {0x0539, "\xd5\xa9"},
    {0x053A, "\xd5\xaa"},
    {0x053B, "\xd5\xab"},
    {0x053C, "\xd5\xac"},
    {0x053D, "\xd5\xad"},
    {0x053E, "\xd5\xae"},
    {0x053F, "\xd5\xaf"},
    {0x0540, "\xd5\xb0"},
    {0x0541, "\xd5\xb1"},
    {0x0542, "\xd5\xb2"},
    {0x0543, "\xd5\xb3"},
    {0x0544, "\xd5\xb4"},
    {0x0545, "\xd5\xb5"},
    {0x0546, "\xd5\xb6"},
    {0x0547, "\xd5\xb7"},
    {0x0548, "\xd5\xb8"},
    {0x0549, "\xd5\xb9"},
    {0x054A, "\xd5\xba"},
    {0x054B, "\xd5\xbb"},
    {0x054C, "\xd5\xbc"},
    {0x054D, "\xd5\xbd"},
    {0x054E, "\xd5\xbe"},
    {0x054F, "\xd5\xbf"},
    {0x0550, "\xd6\x80"},
    {0x0551, "\xd6\x81"},
    {0x0552, "\xd6\x82"},
    {0x0553, "\xd6\x83"},
    {0x0554, "\xd6\x84"},
    {0x0555, "\xd6\x85"},
    {0x0556, "\xd6\x86"},
    {0x10A0, "\xe2\xb4\x80"},
    {0x10A1, "\xe2\xb4\x81"},
    {0x10A2, "\xe2\xb4\x82"},
    {0x10A3, "\xe2\xb4\x83"},
    {0x10A4, "\xe2\xb4\x84"},
    {0x10A5, "\xe2\xb4\x85"},
    {0x10A6, "\xe2\xb4\x86"},
    {0x10A7, "\xe2\xb4\x87"},
    {0x10A8, "\xe2\xb4\x88"},
    {0x10A9, "\xe2\xb4\x89"},
    {0x10AA, "\xe2\xb4\x8a"},
    {0x10AB, "\xe2\xb4\x8b"},
    {0x10AC, "\xe2\xb4\x8c"},
    {0x10AD, "\xe2\xb4\x8d"},
    {0x10AE, "\xe2\xb4\x8e"},
    {0x10AF, "\xe2\xb4\x8f"},
    {0x10B0, "\xe2\xb4\x90"},
    {0x10B1, "\xe2\xb4\x91"},
    {0x10B2, "\xe2\xb4\x92"},
    {0x10B3, "\xe2\xb4\x93"},
    {0x10B4, "\xe2\xb4\x94"},
    {0x10B5, "\xe2\xb4\x95"},
    {0x10B6, "\xe2\xb4\x96"},
    {0x10B7, "\xe2\xb4\x97"},
    {0x10B8, "\xe2\xb4\x98"},
    {0x10B9, "\xe2\xb4\x99"},
    {0x10BA, "\xe2\xb4\x9a"},
    {0x10BB, "\xe2\xb4\x9b"},
    {0x10BC, "\xe2\xb4\x9c"},
    {0x10BD, "\xe2\xb4\x9d"},
    {0x10BE, "\xe2\xb4\x9e"},
    {0x10BF, "\xe2\xb4\x9f"},
    {0x10C0, "\xe2\xb4\xa0"},
    {0x10C1, "\xe2\xb4\xa1"},
    {0x10C2, "\xe2\xb4\xa2"},
    {0x10C3, "\xe2\xb4\xa3"},
    {0x10C4, "\xe2\xb4\xa4"},
    {0x10C5, "\xe2\xb4\xa5"},
    {0x10C7, "\xe2\xb4\xa7"},
    {0x10CD, "\xe2\xb4\xad"},
    {0x13A0, "\xea\xad\xb0"},
    {0x13A1, "\xea\xad\xb1"},
    {0x13A2, "\xea\xad\xb2"},
    {0x13A3, "\xea\xad\xb3"},
    {0x13A4, "\xea\xad\xb4"},
    {0x13A5, "\xea\xad\xb5"},
    {0x13A6, "\xea\xad\xb6"},
    {0x13A7, "\xea\xad\xb7"},
    {0x13A8, "\xea\xad\xb8"},
    {0x13A9, "\xea\xad\xb9"},
    {0x13AA, "\xea\xad\xba"},
    {0x13AB, "\xea\xad\xbb"},
    {0x13AC, "\xea\xad\xbc"},
    {0x13AD, "\xea\xad\xbd"},
    {0x13AE, "\xea\xad\xbe"},
    {0x13AF, "\xea\xad\xbf"},
    {0x13B0, "\xea\xae\x80"},
    {0x13B1, "\xea\xae\x81"},
    {0x13B2, "\xea\xae\x82"},
    {0x13B3, "\xea\xae\x83"},
    {0x13B4, "\xea\xae\x84"},
    {0x13B5, "\xea\xae\x85"},
    {0x13B6, "\xea\xae\x86"},
    {0x13B7, "\xea\xae\x87"},
    {0x13B8, "\xea\xae\x88"},
    {0x13B9, "\xea\xae\x89"},
    {0x13BA, "\xea\xae\x8a"},
    {0x13BB, "\xea\xae\x8b"},
    {0x13BC, "\xea\xae\x8c"},
    {0x13BD, "\xea\xae\x8d"},
    {0x13BE, "\xea\xae\x8e"},
    {0x13BF, "\xea\xae\x8f"},
    {0x13C0, "\xea\xae\x90"},
    {0x13C1, "\xea\xae\x91"},
    {0x13C2, "\xea\xae\x92"},
    {0x13C3, "\xea\xae\x93"},
    {0x13C4, "\xea\xae\x94"},
    {0x13C5, "\xea\xae\x95"},
    {0x13C6, "\xea\xae\x96"},
    {0x13C7, "\xea\xae\x97"},
    {0x13C8, "\xea\xae\x98"},
    {0x13C9, "\xea\xae\x99"},
    {0x13CA, "\xea\xae\x9a"},
    {0x13CB, "\xea\xae\x9b"},
    {0x13CC, "\xea\xae\x9c"},
    {0x13CD, "\xea\xae\x9d"},
    {0x13CE, "\xea\xae\x9e"},
    {0x13CF, "\xea\xae\x9f"},
    {0x13D0, "\xea\xae\xa0"},
    {0x13D1, "\xea\xae\xa1"},
    {0x13D2, "\xea\xae\xa2"},
    {0x13D3, "\xea\xae\xa3"},
    {0x13D4, "\xea\xae\xa4"},
    {0x13D5, "\xea\xae\xa5"},
    {0x13D6, "\xea\xae\xa6"},
    {0x13D7, "\xea\xae\xa7"},
    {0x13D8, "\xea\xae\xa8"},
    {0x13D9, "\xea\xae\xa9"},
    {0x13DA, "\xea\xae\xaa"},
    {0x13DB, "\xea\xae\xab"},
    {0x13DC, "\xea\xae\xac"},
    {0x13DD, "\xea\xae\xad"},
    {0x13DE, "\xea\xae\xae"},
    {0x13DF, "\xea\xae\xaf"},
    {0x13E0, "\xea\xae\xb0"},
    {0x13E1, "\xea\xae\xb1"},
    {0x13E2, "\xea\xae\xb2"},
    {0x13E3, "\xea\xae\xb3"},
    {0x13E4, "\xea\xae\xb4"},
    {0x13E5, "\xea\xae\xb5"},
    {0x13E6, "\xea\xae\xb6"},
    {0x13E7, "\xea\xae\xb7"},
    {0x13E8, "\xea\xae\xb8"},
    {0x13E9, "\xea\xae\xb9"},
    {0x13EA, "\xea\xae\xba"},
    {0x13EB, "\xea\xae\xbb"},
    {0x13EC, "\xea\xae\xbc"},
    {0x13ED, "\xea\xae\xbd"},
    {0x13EE, "\xea\xae\xbe"},
    {0x13EF, "\xea\xae\xbf"},
    {0x13F0, "\xe1\x8f\xb8"},
    {0x13F1, "\xe1\x8f\xb9"},
    {0x13F2, "\xe1\x8f\xba"},
    {0x13F3, "\xe1\x8f\xbb"},
    {0x13F4, "\xe1\x8f\xbc"},
    {0x13F5, "\xe1\x8f\xbd"},
    {0x1C90, "\xe1\x83\x90"},
    {0x1C91, "\xe1\x83\x91"},
    {0x1C92, "\xe1\x83\x92"},
    {0x1C93, "\xe1\x83\x93"},
    {0x1C94, "\xe1\x83\x94"},
    {0x1C95, "\xe1\x83\x95"},
    {0x1C96, "\xe1\x83\x96"},
    {0x1C97, "\xe1\x83\x97"},
    {0x1C98, "\xe1\x83\x98"},
    {0x1C99, "\xe1\x83\x99"},
    {0x1C9A, "\xe1\x83\x9a"},
    {0x1C9B, "\xe1\x83\x9b"},
    {0x1C9C, "\xe1\x83\x9c"},
    {0x1C9D, "\xe1\x83\x9d"},
    {0x1C9E, "\xe1\x83\x9e"},
    {0x1C9F, "\xe1\x83\x9f"},
    {0x1CA0, "\xe1\x83\xa0"},
    {0x1CA1, "\xe1\x83\xa1"},
    {0x1CA2, "\xe1\x83\xa2"},
    {0x1CA3, "\xe1\x83\xa3"},
    {0x1CA4, "\xe1\x83\xa4"},
    {0x1CA5, "\xe1\x83\xa5"},
    {0x1CA6, "\xe1\x83\xa6"},
    {0x1CA7, "\xe1\x83\xa7"},
    {0x1CA8, "\xe1\x83\xa8"},
    {0x1CA9, "\xe1\x83\xa9"},
    {0x1CAA, "\xe1\x83\xaa"},
    {0x1CAB, "\xe1\x83\xab"},
    {0x1CAC, "\xe1\x83\xac"},
    {0x1CAD, "\xe1\x83\xad"},
    {0x1CAE, "\xe1\x83\xae"},
    {0x1CAF, "\xe1\x83\xaf"},
    {0x1CB0, "\xe1\x83\xb0"},
    {0x1CB1, "\xe1\x83\xb1"},
    {0x1CB2, "\xe1\x83\xb2"},
    {0x1CB3, "\xe1\x83\xb3"},
    {0x1CB4, "\xe1\x83\xb4"},
    {0x1CB5, "\xe1\x83\xb5"},
    {0x1CB6, "\xe1\x83\xb6"},
    {0x1CB7, "\xe1\x83\xb7"},
    {0x1CB8, "\xe1\x83\xb8"},
    {0x1CB9, "\xe1\x83\xb9"},
    {0x1CBA, "\xe1\x83\xba"},
    {0x1CBD, "\xe1\x83\xbd"},
    {0x1CBE, "\xe1\x83\xbe"},
    {0x1CBF, "\xe1\x83\xbf"},
    {0x1E00, "\xe1\xb8\x81"},
    {0x1E02, "\xe1\xb8\x83"},
    {0x1E04, "\xe1\xb8\x85"},
    {0x1E06, "\xe1\xb8\x87"},
    {0x1E08, "\xe1\xb8\x89"},
    {0x1E0A, "\xe1\xb8\x8b"},
    {0x1E0C, "\xe1\xb8\x8d"},
    {0x1E0E, "\xe1\xb8\x8f"},
    {0x1E10, "\xe1\xb8\x91"},
    {0x1E12, "\xe1\xb8\x93"},
    {0x1E14, "\xe1\xb8\x95"},
    {0x1E16, "\xe1\xb8\x97"},
    {0x1E18, "\xe1\xb8\x99"},
    {0x1E1A, "\xe1\xb8\x9b"},
    {0x1E1C, "\xe1\xb8\x9d"},
    {0x1E1E, "\xe1\xb8\x9f"},
    {0x1E20, "\xe1\xb8\xa1"},
    {0x1E22, "\xe1\xb8\xa3"},
    {0x1E24, "\xe1\xb8\xa5"},
    {0x1E26, "\xe1\xb8\xa7"},
    {0x1E28, "\xe1\xb8\xa9"},
    {0x1E2A, "\xe1\xb8\xab"},
    {0x1E2C, "\xe1\xb8\xad"},
    {0x1E2E, "\xe1\xb8\xaf"},
    {0x1E30, "\xe1\xb8\xb1"},
    {0x1E32, "\xe1\xb8\xb3"},
    {0x1E34, "\xe1\xb8\xb5"},
    {0x1E36, "\xe1\xb8\xb7"},
    {0x1E38, "\xe1\xb8\xb9"},
    {0x1E3A, "\xe1\xb8\xbb"},
    {0x1E3C, "\xe1\xb8\xbd"},
    {0x1E3E, "\xe1\xb8\xbf"},
    {0x1E40, "\xe1\xb9\x81"},
    {0x1E42, "\xe1\xb9\x83"},
    {0x1E44, "\xe1\xb9\x85"},
    {0x1E46, "\xe1\xb9\x87"},
    {0x1E48, "\xe1\xb9\x89"},
    {0x1E4A, "\xe1\xb9\x8b"},
    {0x1E4C, "\xe1\xb9\x8d"},
    {0x1E4E, "\xe1\xb9\x8f"},
    {0x1E50, "\xe1\xb9\x91"},
    {0x1E52, "\xe1\xb9\x93"},
    {0x1E54, "\xe1\xb9\x95"},
    {0x1E56, "\xe1\xb9\x97"},
    {0x1E58, "\xe1\xb9\x99"},
    {0x1E5A, "\xe1\xb9\x9b"},
    {0x1E5C, "\xe1\xb9\x9d"},
    {0x1E5E, "\xe1\xb9\x9f"},
    {0x1E60, "\xe1\xb9\xa1"},
    {0x1E62, "\xe1\xb9\xa3"},
    {0x1E64, "\xe1\xb9\xa5"},
    {0x1E66, "\xe1\xb9\xa7"},
    {0x1E68, "\xe1\xb9\xa9"},
    {0x1E6A, "\xe1\xb9\xab"},
    {0x1E6C, "\xe1\xb9\xad"},
    {0x1E6E, "\xe1\xb9\xaf"},
    {0x1E70, "\xe1\xb9\xb1"},
    {0x1E72, "\xe1\xb9\xb3"},
    {0x1E74, "\xe1\xb9\xb5"},
    {0x1E76, "\xe1\xb9\xb7"},
    {0x1E78, "\xe1\xb9\xb9"},
    {0x1E7A, "\xe1\xb9\xbb"},
    {0x1E7C, "\xe1\xb9\xbd"},
    {0x1E7E, "\xe1\xb9\xbf"},
    {0x1E80, "\xe1\xba\x81"},
    {0x1E82, "\xe1\xba\x83"},
    {0x1E84, "\xe1\xba\x85"},
    {0x1E86, "\xe1\xba\x87"},
    {0x1E88, "\xe1\xba\x89"},
    {0x1E8A, "\xe1\xba\x8b"},
    {0x1E8C, "\xe1\xba\x8d"},
    {0x1E8E, "\xe1\xba\x8f"},
    {0x1E90, "\xe1\xba\x91"},
    {0x1E92, "\xe1\xba\x93"},
    {0x1E94, "\xe1\xba\x95"},
    {0x1E9E, "\xc3\x9f"},
    {0x1EA0, "\xe1\xba\xa1"},
    {0x1EA2, "\xe1\xba\xa3"},
    {0x1EA4, "\xe1\xba\xa5"},
    {0x1EA6, "\xe1\xba\xa7"},
    {0x1EA8, "\xe1\xba\xa9"},
    {0x1EAA, "\xe1\xba\xab"},
    {0x1EAC, "\xe1\xba\xad"},
    {0x1EAE, "\xe1\xba\xaf"},
    {0x1EB0, "\xe1\xba\xb1"},
    {0x1EB2, "\xe1\xba\xb3"},
    {0x1EB4, "\xe1\xba\xb5"},
    {0x1EB6, "\xe1\xba\xb7"},
    {0x1EB8, "\xe1\xba\xb9"},
    {0x1EBA, "\xe1\xba\xbb"},
    {0x1EBC, "\xe1\xba\xbd"},
    {0x1EBE, "\xe1\xba\xbf"},
    {0x1EC0, "\xe1\xbb\x81"},
    {0x1EC2, "\xe1\xbb\x83"},
    {0x1EC4, "\xe1\xbb\x85"},
    {0x1EC6, "\xe1\xbb\x87"},
    {0x1EC8, "\xe1\xbb\x89"},
    {0x1ECA, "\xe1\xbb\x8b"},
    {0x1ECC, "\xe1\xbb\x8d"},
    {0x1ECE, "\xe1\xbb\x8f"},
    {0x1ED0, "\xe1\xbb\x91"},
    {0x1ED2, "\xe1\xbb\x93"},
    {0x1ED4, "\xe1\xbb\x95"},
    {0x1ED6, "\xe1\xbb\x97"},
    {0x1ED8, "\xe1\xbb\x99"},
    {0x1EDA, "\xe1\xbb\x9b"},
    {0x1EDC, "\xe1\xbb\x9d"},
    {0x1EDE, "\xe1\xbb\x9f"},
    {0x1EE0, "\xe1\xbb\xa1"},
    {0x1EE2, "\xe1\xbb\xa3"},
    {0x1EE4, "\xe1\xbb\xa5"},
    {0x1EE6, "\xe1\xbb\xa7"},
    {0x1EE8, "\xe1\xbb\xa9"},
    {0x1EEA, "\xe1\xbb\xab"},
    {0x1EEC, "\xe1\xbb\xad"},
    {0x1EEE, "\xe1\xbb\xaf"},
    {0x1EF0, "\xe1\xbb\xb1"},
    {0x1EF2, "\xe1\xbb\xb3"},
    {0x1EF4, "\xe1\xbb\xb5"},
    {0x1EF6, "\xe1\xbb\xb7"},
    {0x1EF8, "\xe1\xbb\xb9"},
    {0x1EFA, "\xe1\xbb\xbb"},
    {0x1EFC, "\xe1\xbb\xbd"},
    {0x1EFE, "\xe1\xbb\xbf"},
    {0x1F08, "\xe1\xbc\x80"},
    {0x1F09, "\xe1\xbc\x81"},
    {0x1F0A, "\xe1\xbc\x82"},
    {0x1F0B, "\xe1\xbc\x83"},
    {0x1F0C, "\xe1\xbc\x84"},
    {0x1F0D, "\xe1\xbc\x85"},
    {0x1F0E, "\xe1\xbc\x86"},
    {0x1F0F, "\xe1\xbc\x87"},
    {0x1F18, "\xe1\xbc\x90"},
    {0x1F19, "\xe1\xbc\x91"},
    {0x1F1A, "\xe1\xbc\x92"},
    {0x1F1B, "\xe1\xbc\x93"},
    {0x1F1C, "\xe1\xbc\x94"},
    {0x1F1D, "\xe1\xbc\x95"},
    {0x1F28, "\xe1\xbc\xa0"},
    {0x1F29, "\xe1\xbc\xa1"},
    {0x1F2A, "\xe1\xbc\xa2"},
    {0x1F2B, "\xe1\xbc\xa3"},
    {0x1F2C, "\xe1\xbc\xa4"},
    {0x1F2D, "\xe1\xbc\xa5"},
    {0x1F2E, "\xe1\xbc\xa6"},
    {0x1F2F, "\xe1\xbc\xa7"},
    {0x1F38, "\xe1\xbc\xb0"},
    {0x1F39, "\xe1\xbc\xb1"},
    {0x1F3A, "\xe1\xbc\xb2"},
    {0x1F3B, "\xe1\xbc\xb3"},
    {0x1F3C, "\xe1\xbc\xb4"},
    {0x1F3D, "\xe1\xbc\xb5"},
    {0x1F3E, "\xe1\xbc\xb6"},
    {0x1F3F, "\xe1\xbc\xb7"},
    {0x1F48, "\xe1\xbd\x80"},
    {0x1F49, "\xe1\xbd\x81"},
    {0x1F4A, "\xe1\xbd\x82"},
    {0x1F4B, "\xe1\xbd\x83"},
    {0x1F4C, "\xe1\xbd\x84"},
    {0x1F4D, "\xe1\xbd\x85"},
    {0x1F59, "\xe1\xbd\x91"},
    {0x1F5B, "\xe1\xbd\x93"},
    {0x1F5D, "\xe1\xbd\x95"},
    {0x1F5F, "\xe1\xbd\x97"},
    {0x1F68, "\xe1\xbd\xa0"},
    {0x1F69, "\xe1\xbd\xa1"},
    {0x1F6A, "\xe1\xbd\xa2"},
    {0x1F6B, "\xe1\xbd\xa3"},
    {0x1F6C, "\xe1\xbd\xa4"},
    {0x1F6D, "\xe1\xbd\xa5"},
    {0x1F6E, "\xe1\xbd\xa6"},
    {0x1F6F, "\xe1\xbd\xa7"},
    {0x1F88, "\xe1\xbe\x80"},
    {0x1F89, "\xe1\xbe\x81"},
    {0x1F8A, "\xe1\xbe\x82"},
    {0x1F8B, "\xe1\xbe\x83"},
    {0x1F8C, "\xe1\xbe\x84"},
    {0x1F8D, "\xe1\xbe\x85"},
    {0x1F8E, "\xe1\xbe\x86"},
    {0x1F8F, "\xe1\xbe\x87"},
    {0x1F98, "\xe1\xbe\x90"},
    {0x1F99, "\xe1\xbe\x91"},
    {0x1F9A, "\xe1\xbe\x92"},
    {0x1F9B, "\xe1\xbe\x93"},
    {0x1F9C, "\xe1\xbe\x94"},
    {0x1F9D, "\xe1\xbe\x95"},
    {0x1F9E, "\xe1\xbe\x96"},
    {0x1F9F, "\xe1\xbe\x97"},
    {0x1FA8, "\xe1\xbe\xa0"},
    {0x1FA9, "\xe1\xbe\xa1"},
    {0x1FAA, "\xe1\xbe\xa2"},
    {0x1FAB, "\xe1\xbe\xa3"},
    {0x1FAC, "\xe1\xbe\xa4"},
    {0x1FAD, "\xe1\xbe\xa5"},
    {0x1FAE, "\xe1\xbe\xa6"},
    {0x1FAF, "\xe1\xbe\xa7"},
    {0x1FB8, "\xe1\xbe\xb0"},
    {0x1FB9, "\xe1\xbe\xb1"},
    {0x1FBA, "\xe1\xbd\xb0"},
    {0x1FBB, "\xe1\xbd\xb1"},
    {0x1FBC, "\xe1\xbe\xb3"},
    {0x1FC8, "\xe1\xbd\xb2"},
    {0x1FC9, "\xe1\xbd\xb3"},
    {0x1FCA, "\xe1\xbd\xb4"},
    {0x1FCB, "\xe1\xbd\xb5"},
    {0x1FCC, "\xe1\xbf\x83"},
    {0x1FD8, "\xe1\xbf\x90"},
    {0x1FD9, "\xe1\xbf\x91"},
    {0x1FDA, "\xe1\xbd\xb6"},
    {0x1FDB, "\xe1\xbd\xb7"},
    {0x1FE8, "\xe1\xbf\xa0"},
    {0x1FE9, "\xe1\xbf\xa1"},
    {0x1FEA, "\xe1\xbd\xba"},
    {0x1FEB, "\xe1\xbd\xbb"},
    {0x1FEC, "\xe1\xbf\xa5"},
    {0x1FF8, "\xe1\xbd\xb8"},
    {0x1FF9, "\xe1\xbd\xb9"},
    {0x1FFA, "\xe1\xbd\xbc"},
    {0x1FFB, "\xe1\xbd\xbd"},
    {0x1FFC, "\xe1\xbf\xb3"},
    {0x2126, "\xcf\x89"},
    {0x212A, "\x6b"},
    {0x212B, "\xc3\xa5"},
    {0x2132, "\xe2\x85\x8e"},
    {0x2160, "\xe2\x85\xb0"},
    {0x2161, "\xe2\x85\xb1"},
    {0x2162, "\xe2\x85\xb2"},
    {0x2163, "\xe2\x85\xb3"},
    {0x2164, "\xe2\x85\xb4"},
    {0x2165, "\xe2\x85\xb5"},
    {0x2166, "\xe2\x85\xb6"},
    {0x2167, "\xe2\x85\xb7"},
    {0x2168, "\xe2\x85\xb8"},
    {0x2169, "\xe2\x85\xb9"},
    {0x216A, "\xe2\x85\xba"},
    {0x216B, "\xe2\x85\xbb"},
    {0x216C, "\xe2\x85\xbc"},
    {0x216D, "\xe2\x85\xbd"},
    {0x216E, "\xe2\x85\xbe"},
    {0x216F, "\xe2\x85\xbf"},
    {0x2183, "\xe2\x86\x84"},
    {0x24B6, "\xe2\x93\x90"},
    {0x24B7, "\xe2\x93\x91"},
    {0x24B8, "\xe2\x93\x92"},
    {0x24B9, "\xe2\x93\x93"},
    {0x24BA, "\xe2\x93\x94"},
    {0x24BB, "\xe2\x93\x95"},
    {0x24BC, "\xe2\x93\x96"},
    {0x24BD, "\xe2\x93\x97"},
    {0x24BE, "\xe2\x93\x98"},
    {0x24BF, "\xe2\x93\x99"},
    {0x24C0, "\xe2\x93\x9a"},
    {0x24C1, "\xe2\x93\x9b"},
    {0x24C2, "\xe2\x93\x9c"},
    {0x24C3, "\xe2\x93\x9d"},
    {0x24C4, "\xe2\x93\x9e"},
    {0x24C5, "\xe2\x93\x9f"},
    {0x24C6, "\xe2\x93\xa0"},
    {0x24C7, "\xe2\x93\xa1"},
    {0x24C8, "\xe2\x93\xa2"},
    {0x24C9, "\xe2\x93\xa3"},
    {0x24CA, "\xe2\x93\xa4"},
    {0x24CB, "\xe2\x93\xa5"},
    {0x24CC, "\xe2\x93\xa6"},
    {0x24CD, "\xe2\x93\xa7"},
    {0x24CE, "\xe2\x93\xa8"},
    {0x24CF, "\xe2\x93\xa9"},
    {0x2C00, "\xe2\xb0\xb0"},
    {0x2C01, "\xe2\xb0\xb1"},
    {0x2C02, "\xe2\xb0\xb2"},
    {0x2C03, "\xe2\xb0\xb3"},
    {0x2C04, "\xe2\xb0\xb4"},
    {0x2C05, "\xe2\xb0\xb5"},
    {0x2C06, "\xe2\xb0\xb6"},
    {0x2C07, "\xe2\xb0\xb7"},
    {0x2C08, "\xe2\xb0\xb8"},
    {0x2C09, "\xe2\xb0\xb9"},
    {0x2C0A, "\xe2\xb0\xba"},
    {0x2C0B, "\xe2\xb0\xbb"},
    {0x2C0C, "\xe2\xb0\xbc"},
    {0x2C0D, "\xe2\xb0\xbd"},
    {0x2C0E, "\xe2\xb0\xbe"},
    {0x2C0F, "\xe2\xb0\xbf"},
    {0x2C10, "\xe2\xb1\x80"},
    {0x2C11, "\xe2\xb1\x81"},
    {0x2C12, "\xe2\xb1\x82"},
    {0x2C13, "\xe2\xb1\x83"},
    {0x2C14, "\xe2\xb1\x84"},
    {0x2C15, "\xe2\xb1\x85"},
    {0x2C16, "\xe2\xb1\x86"},
    {0x2C17, "\xe2\xb1\x87"},
    {0x2C18, "\xe2\xb1\x88"},
    {0x2C19, "\xe2\xb1\x89"},
    {0x2C1A, "\xe2\xb1\x8a"},
    {0x2C1B, "\xe2\xb1\x8b"},
    {0x2C1C, "\xe2\xb1\x8c"},
    {0x2C1D, "\xe2\xb1\x8d"},
    {0x2C1E, "\xe2\xb1\x8e"},
    {0x2C1F, "\xe2\xb1\x8f"},
    {0x2C20, "\xe2\xb1\x90"},
    {0x2C21, "\xe2\xb1\x91"},
    {0x2C22, "\xe2\xb1\x92"},
    {0x2C23, "\xe2\xb1\x93"},
    {0x2C24, "\xe2\xb1\x94"},
    {0x2C25, "\xe2\xb1\x95"},
    {0x2C26, "\xe2\xb1\x96"},
    {0x2C27, "\xe2\xb1\x97"},
    {0x2C28, "\xe2\xb1\x98"},
    {0x2C29, "\xe2\xb1\x99"},
    {0x2C2A, "\xe2\xb1\x9a"},
    {0x2C2B, "\xe2\xb1\x9b"},
    {0x2C2C, "\xe2\xb1\x9c"},
    {0x2C2D, "\xe2\xb1\x9d"},
    {0x2C2E, "\xe2\xb1\x9e"},
    {0x2C60, "\xe2\xb1\xa1"},
    {0x2C62, "\xc9\xab"},
    {0x2C63, "\xe1\xb5\xbd"},
    {0x2C64, "\xc9\xbd"},
    {0x2C67, "\xe2\xb1\xa8"},
    {0x2C69, "\xe2\xb1\xaa"},
    {0x2C6B, "\xe2\xb1\xac"},
    {0x2C6D, "\xc9\x91"},
    {0x2C6E, "\xc9\xb1"},
    {0x2C6F, "\xc9\x90"},
    {0x2C70, "\xc9\x92"},
    {0x2C72, "\xe2\xb1\xb3"},
    {0x2C75, "\xe2\xb1\xb6"},
    {0x2C7E, "\xc8\xbf"},
    {0x2C7F, "\xc9\x80"},
    {0x2C80, "\xe2\xb2\x81"},
    {0x2C82, "\xe2\xb2\x83"},
    {0x2C84, "\xe2\xb2\x85"},
    {0x2C86, "\xe2\xb2\x87"},
    {0x2C88, "\xe2\xb2\x89"},
    {0x2C8A, "\xe2\xb2\x8b"},
    {0x2C8C, "\xe2\xb2\x8d"},
    {0x2C8E, "\xe2\xb2\x8f"},
    {0x2C90, "\xe2\xb2\x91"},
    {0x2C92, "\xe2\xb2\x93"},
    {0x2C94, "\xe2\xb2\x95"},
    {0x2C96, "\xe2\xb2\x97"},
    {0x2C98, "\xe2\xb2\x99"},
    {0x2C9A, "\xe2\xb2\x9b"},
    {0x2C9C, "\xe2\xb2\x9d"},
    {0x2C9E, "\xe2\xb2\x9f"},
    {0x2CA0, "\xe2\xb2\xa1"},
    {0x2CA2, "\xe2\xb2\xa3"},
    {0x2CA4, "\xe2\xb2\xa5"},
    {0x2CA6, "\xe2\xb2\xa7"},
    {0x2CA8, "\xe2\xb2\xa9"},
    {0x2CAA, "\xe2\xb2\xab"},
    {0x2CAC, "\xe2\xb2\xad"},
    {0x2CAE, "\xe2\xb2\xaf"},
    {0x2CB0, "\xe2\xb2\xb1"},
    {0x2CB2, "\xe2\xb2\xb3"},
    {0x2CB4, "\xe2\xb2\xb5"},
    {0x2CB6, "\xe2\xb2\xb7"},
    {0x2CB8, "\xe2\xb2\xb9"},
    {0x2CBA, "\xe2\xb2\xbb"},
    {0x2CBC, "\xe2\xb2\xbd"},
    {0x2CBE, "\xe2\xb2\xbf"},
    {0x2CC0, "\xe2\xb3\x81"},
    {0x2CC2, "\xe2\xb3\x83"},
    {0x2CC4, "\xe2\xb3\x85"},
    {0x2CC6, "\xe2\xb3\x87"},
    {0x2CC8, "\xe2\xb3\x89"},
    {0x2CCA, "\xe2\xb3\x8b"},
    {0x2CCC, "\xe2\xb3\x8d"},
    {0x2CCE, "\xe2\xb3\x8f"},
    {0x2CD0, "\xe2\xb3\x91"},
    {0x2CD2, "\xe2\xb3\x93"},
    {0x2CD4, "\xe2\xb3\x95"},
    {0x2CD6, "\xe2\xb3\x97"},
    {0x2CD8, "\xe2\xb3\x99"},
    {0x2CDA, "\xe2\xb3\x9b"},
    {0x2CDC, "\xe2\xb3\x9d"},
    {0x2CDE, "\xe2\xb3\x9f"},
    {0x2CE0, "\xe2\xb3\xa1"},
    {0x2CE2, "\xe2\xb3\xa3"},
    {0x2CEB, "\xe2\xb3\xac"},
    {0x2CED, "\xe2\xb3\xae"},
    {0x2CF2, "\xe2\xb3\xb3"},
    {0xA640, "\xea\x99\x81"},
    {0xA642, "\xea\x99\x83"},
    {0xA644, "\xea\x99\x85"},
    {0xA646, "\xea\x99\x87"},
    {0xA648, "\xea\x99\x89"},
    {0xA64A, "\xea\x99\x8b"},
    {0xA64C, "\xea\x99\x8d"},
    {0xA64E, "\xea\x99\x8f"},
    {0xA650, "\xea\x99\x91"},
    {0xA652, "\xea\x99\x93"},
    {0xA654, "\xea\x99\x95"},
    {0xA656, "\xea\x99\x97"},
    {0xA658, "\xea\x99\x99"},
    {0xA65A, "\xea\x99\x9b"},
    {0xA65C, "\xea\x99\x9d"},
    {0xA65E, "\xea\x99\x9f"},
    {0xA660, "\xea\x99\xa1"},
    {0xA662, "\xea\x99\xa3"},
    {0xA664, "\xea\x99\xa5"},
    {0xA666, "\xea\x99\xa7"},
    {0xA668, "\xea\x99\xa9"},
    {0xA66A, "\xea\x99\xab"},
    {0xA66C, "\xea\x99\xad"},
    {0xA680, "\xea\x9a\x81"},
    {0xA682, "\xea\x9a\x83"},
    {0xA684, "\xea\x9a\x85"},
    {0xA686, "\xea\x9a\x87"},
    {0xA688, "\xea\x9a\x89"},
    {0xA68A, "\xea\x9a\x8b"},
    {0xA68C, "\xea\x9a\x8d"},
    {0xA68E, "\xea\x9a\x8f"},
    {0xA690, "\xea\x9a\x91"},
    {0xA692, "\xea\x9a\x93"},
    {0xA694, "\xea\x9a\x95"},
    {0xA696, "\xea\x9a\x97"},
    {0xA698, "\xea\x9a\x99"},
    {0xA69A, "\xea\x9a\x9b"},
    {0xA722, "\xea\x9c\xa3"},
    {0xA724, "\xea\x9c\xa5"},
    {0xA726, "\xea\x9c\xa7"},
    {0xA728, "\xea\x9c\xa9"},
    {0xA72A, "\xea\x9c\xab"},
    {0xA72C, "\xea\x9c\xad"},
    {0xA72E, "\xea\x9c\xaf"},
    {0xA732, "\xea\x9c\xb3"},
    {0xA734, "\xea\x9c\xb5"},
    {0xA736, "\xea\x9c\xb7"},
    {0xA738, "\xea\x9c\xb9"},
    {0xA73A, "\xea\x9c\xbb"},
    {0xA73C, "\xea\x9c\xbd"},
    {0xA73E, "\xea\x9c\xbf"},
    {0xA740, "\xea\x9d\x81"},
    {0xA742, "\xea\x9d\x83"},
    {0xA744, "\xea\x9d\x85"},
    {0xA746, "\xea\x9d\x87"},
    {0xA748, "\xea\x9d\x89"},
    {0xA74A, "\xea\x9d\x8b"},
    {0xA74C, "\xea\x9d\x8d"},
    {0xA74E, "\xea\x9d\x8f"},
    {0xA750, "\xea\x9d\x91"},
    {0xA752, "\xea\x9d\x93"},
    {0xA754, "\xea\x9d\x95"},
    {0xA756, "\xea\x9d\x97"},
    {0xA758, "\xea\x9d\x99"},
    {0xA75A, "\xea\x9d\x9b"},
    {0xA75C, "\xea\x9d\x9d"},
    {0xA75E, "\xea\x9d\x9f"},
    {0xA760, "\xea\x9d\xa1"},
    {0xA762, "\xea\x9d\xa3"},
    {0xA764, "\xea\x9d\xa5"},
    {0xA766, "\xea\x9d\xa7"},
    {0xA768, "\xea\x9d\xa9"},
    {0xA76A, "\xea\x9d\xab"},
    {0xA76C, "\xea\x9d\xad"},
    {0xA76E, "\xea\x9d\xaf"},
    {0xA779, "\xea\x9d\xba"},
    {0xA77B, "\xea\x9d\xbc"},
    {0xA77D, "\xe1\xb5\xb9"},
    {0xA77E, "\xea\x9d\xbf"},
    {0xA780, "\xea\x9e\x81"},
    {0xA782, "\xea\x9e\x83"},
    {0xA784, "\xea\x9e\x85"},
    {0xA786, "\xea\x9e\x87"},
    {0xA78B, "\xea\x9e\x8c"},
    {0xA78D, "\xc9\xa5"},
    {0xA790, "\xea\x9e\x91"},
    {0xA792, "\xea\x9e\x93"},
    {0xA796, "\xea\x9e\x97"},
    {0xA798, "\xea\x9e\x99"},
    {0xA79A, "\xea\x9e\x9b"},
    {0xA79C, "\xea\x9e\x9d"},
    {0xA79E, "\xea\x9e\x9f"},
    {0xA7A0, "\xea\x9e\xa1"},
    {0xA7A2, "\xea\x9e\xa3"},
    {0xA7A4, "\xea\x9e\xa5"},
    {0xA7A6, "\xea\x9e\xa7"},
    {0xA7A8, "\xea\x9e\xa9"},
    {0xA7AA, "\xc9\xa6"},
    {0xA7AB, "\xc9\x9c"},
    {0xA7AC, "\xc9\xa1"},
    {0xA7AD, "\xc9\xac"},
    {0xA7AE, "\xc9\xaa"},
    {0xA7B0, "\xca\x9e"},
    {0xA7B1, "\xca\x87"},
    {0xA7B2, "\xca\x9d"},
    {0xA7B3, "\xea\xad\x93"},
    {0xA7B4, "\xea\x9e\xb5"},
    {0xA7B6, "\xea\x9e\xb7"},
    {0xA7B8, "\xea\x9e\xb9"},
    {0xA7BA, "\xea\x9e\xbb"},
    {0xA7BC, "\xea\x9e\xbd"},
    {0xA7BE, "\xea\x9e\xbf"},
    {0xA7C2, "\xea\x9f\x83"},
    {0xA7C4, "\xea\x9e\x94"},
    {0xA7C5, "\xca\x82"},
    {0xA7C6, "\xe1\xb6\x8e"},
    {0xA7C7, "\xea\x9f\x88"},
    {0xA7C9, "\xea\x9f\x8a"},
    {0xA7F5, "\xea\x9f\xb6"},
    {0xFF21, "\xef\xbd\x81"},
    {0xFF22, "\xef\xbd\x82"},
    {0xFF23, "\xef\xbd\x83"},
    {0xFF24, "\xef\xbd\x84"},
    {0xFF25, "\xef\xbd\x85"},
    {0xFF26, "\xef\xbd\x86"},
    {0xFF27, "\xef\xbd\x87"},
    {0xFF28, "\xef\xbd\x88"},
    {0xFF29, "\xef\xbd\x89"},
    {0xFF2A, "\xef\xbd\x8a"},
    {0xFF2B, "\xef\xbd\x8b"},
    {0xFF2C, "\xef\xbd\x8c"},
    {0xFF2D, "\xef\xbd\x8d"},
    {0xFF2E, "\xef\xbd\x8e"},
    {0xFF2F, "\xef\xbd\x8f"},
    {0xFF30, "\xef\xbd\x90"},
    {0xFF31, "\xef\xbd\x91"},
    {0xFF32, "\xef\xbd\x92"},
    {0xFF33, "\xef\xbd\x93"},
    {0xFF34, "\xef\xbd\x94"},
    {0xFF35, "\xef\xbd\x95"},
    {0xFF36, "\xef\xbd\x96"},
    {0xFF37, "\xef\xbd\x97"},
    {0xFF38, "\xef\xbd\x98"},
    {0xFF39, "\xef\xbd\x99"},
    {0xFF3A, "\xef\xbd\x9a"},
};

inline constexpr MappedChar kStripMarks[2508] = {
    {0x00C0, "\x41"},
    {0x00C1, "\x41"},
    {0x00C2, "\x41"},
    {0x00C3, "\x41"},
    {0x00C4, "\x41"},
    {0x00C5, "\x41"},
    {0x00C7, "\x43"},
    {0x00C8, "\x45"},
    {0x00C9, "\x45"},
    {0x00CA, "\x45"},
    {0x00CB, "\x45"},
    {0x00CC, "\x49"},
    {0x00CD, "\x49"},
    {0x00CE, "\x49"},
    {0x00CF, "\x49"},
    {0x00D1, "\x4e"},
    {0x00D2, "\x4f"},
    {0x00D3, "\x4f"},
    {0x00D4, "\x4f"},
    {0x00D5, "\x4f"},
    {0x00D6, "\x4f"},
    {0x00D9, "\x55"},
    {0x00DA, "\x55"},
    {0x00DB, "\x55"},
    {0x00DC, "\x55"},
    {0x00DD, "\x59"},
    {0x00E0, "\x61"},
    {0x00E1, "\x61"},
    {0x00E2, "\x61"},
    {0x00E3, "\x61"},
    {0x00E4, "\x61"},
    {0x00E5, "\x61"},
    {0x00E7, "\x63"},
    {0x00E8, "\x65"},
    {0x00E9, "\x65"},
    {0x00EA, "\x65"},
    {0x00EB, "\x65"},
    {0x00EC, "\x69"},
    {0x00ED, "\x69"},
    {0x00EE, "\x69"},
    {0x00EF, "\x69"},
    {0x00F1, "\x6e"},
    {0x00F2, "\x6f"},
    {0x00F3, "\x6f"},
    {0x00F4, "\x6f"},
    {0x00F5, "\x6f"},
    {0x00F6, "\x6f"},
    {0x00F9, "\x75"},
    {0x00FA, "\x75"},
    {0x00FB, "\x75"},
    {0x00FC, "\x75"},
    {0x00FD, "\x79"},
    {0x00FF, "\x79"},
    {0x0100, "\x41"},
    {0x0101, "\x61"},
    {0x0102, "\x41"},
    {0x0103, "\x61"},
    {0x0104, "\x41"},
    {0x0105, "\x61"},
    {0x0106, "\x43"},
    {0x0107, "\x63"},
    {0x0108, "\x43"},
    {0x0109, "\x63"},
    {0x010A, "\x43"},
    {0x010B, "\x63"},
    {0x010C, "\x43"},
    {0x010D, "\x63"},
    {0x010E, "\x44"},
    {0x010F, "\x64"},
    {0x0112, "\x45"},
    {0x0113, "\x65"},
    {0x0114, "\x45"},
    {0x0115, "\x65"},
    {0x0116, "\x45"},
    {0x0117, "\x65"},
    {0x0118, "\x45"},
    {0x0119, "\x65"},
    {0x011A, "\x45"},
    {0x011B, "\x65"},
    {0x011C, "\x47"},
    {0x011D, "\x67"},
    {0x011E, "\x47"},
    {0x011F, "\x67"},
    {0x0120, "\x47"},
    {0x0121, "\x67"},
    {0x0122, "\x47"},
    {0x0123, "\x67"},
    {0x0124, "\x48"},
    {0x0125, "\x68"},
    {0x0128, "\x49"},
    {0x0129, "\x69"},
    {0x012A, "\x49"},
    {0x012B, "\x69"},
    {0x012C, "\x49"},
    {0x012D, "\x69"},
    {0x012E, "\x49"},
    {0x012F, "\x69"},
    {0x0130, "\x49"},
    {0x0134, "\x4a"},
    {0x0135, "\x6a"},
    {0x0136, "\x4b"},
    {0x0137, "\x6b"},
    {0x0139, "\x4c"},
    {0x013A, "\x6c"},
    {0x013B, "\x4c"},
    {0x013C, "\x6c"},
    {0x013D, "\x4c"},
    {0x013E, "\x6c"},
    {0x0143, "\x4e"},
    {0x0144, "\x6e"},
    {0x0145, "\x4e"},
    {0x0146, "\x6e"},
    {0x0147, "\x4e"},
    {0x0148, "\x6e"},
    {0x014C, "\x4f"},
    {0x014D, "\x6f"},
    {0x014E, "\x4f"},
    {0x014F, "\x6f"},
    {0x0150, "\x4f"},
    {0x0151, "\x6f"},
    {0x0154, "\x52"},
    {0x0155, "\x72"},
    {0x0156, "\x52"},
    {0x0157, "\x72"},
    {0x0158, "\x52"},
    {0x0159, "\x72"},
    {0x015A, "\x53"},
    {0x015B, "\x73"},
    {0x015C, "\x53"},
    {0x015D, "\x73"},
    {0x015E, "\x53"},
    {0x015F, "\x73"},
    {0x0160, "\x53"},
    {0x0161, "\x73"},
    {0x0162, "\x54"},
    {0x0163, "\x74"},
    {0x0164, "\x54"},
    {0x0165, "\x74"},
    {0x0168, "\x55"},
    {0x0169, "\x75"},
    {0x016A, "\x55"},
    {0x016B, "\x75"},
    {0x016C, "\x55"},
    {0x016D, "\x75"},
    {0x016E, "\x55"},
    {0x016F, "\x75"},
    {0x0170, "\x55"},
    {0x0171, "\x75"},
    {0x0172, "\x55"},
    {0x0173, "\x75"},
    {0x0174, "\x57"},
    {0x0175, "\x77"},
    {0x0176, "\x59"},
    {0x0177, "\x79"},
    {0x0178, "\x59"},
    {0x0179, "\x5a"},
    {0x017A, "\x7a"},
    {0x017B, "\x5a"},
    {0x017C, "\x7a"},
    {0x017D, "\x5a"},
    {0x017E, "\x7a"},
    {0x01A0, "\x4f"},
    {0x01A1, "\x6f"},
    {0x01AF, "\x55"},
    {0x01B0, "\x75"},
    {0x01CD, "\x41"},
    {0x01CE, "\x61"},
    {0x01CF, "\x49"},
    {0x01D0, "\x69"},
    {0x01D1, "\x4f"},
    {0x01D2, "\x6f"},
    {0x01D3, "\x55"},
    {0x01D4, "\x75"},
    {0x01D5, "\x55"},
    {0x01D6, "\x75"},
    {0x01D7, "\x55"},
    {0x01D8, "\x75"},
    {0x01D9, "\x55"},
    {0x01DA, "\x75"},
    {0x01DB, "\x55"},
    {0x01DC, "\x75"},
    {0x01DE, "\x41"},
    {0x01DF, "\x61"},
    {0x01E0, "\x41"},
    {0x01E1, "\x61"},
    {0x01E2, "\xc3\x86"},
    {0x01E3, "\xc3\xa6"},
    {0x01E6, "\x47"},
    {0x01E7, "\x67"},
    {0x01E8, "\x4b"},
    {0x01E9, "\x6b"},
    {0x01EA, "\x4f"},
    {0x01EB, "\x6f"},
    {0x01EC, "\x4f"},
    {0x01ED, "\x6f"},
    {0x01EE, "\xc6\xb7"},
    {0x01EF, "\xca\x92"},
    {0x01F0, "\x6a"},
    {0x01F4, "\x47"},
    {0x01F5, "\x67"},
    {0x01F8, "\x4e"},
    {0x01F9, "\x6e"},
    {0x01FA, "\x41"},
    {0x01FB, "\x61"},
    {0x01FC, "\xc3\x86"},
    {0x01FD, "\xc3\xa6"},
    {0x01FE, "\xc3\x98"},
    {0x01FF, "\xc3\xb8"},
    {0x0200, "\x41"},
    {0x0201, "\x61"},
    {0x0202, "\x41"},
    {0x0203, "\x61"},
    {0x0204, "\x45"},
    {0x0205, "\x65"},
    {0x0206, "\x45"},
    {0x0207, "\x65"},
    {0x0208, "\x49"},
    {0x0209, "\x69"},
    {0x020A, "\x49"},
    {0x020B, "\x69"},
    {0x020C, "\x4f"},
    {0x020D, "\x6f"},
    {0x020E, "\x4f"},
    {0x020F, "\x6f"},
    {0x0210, "\x52"},
    {0x0211, "\x72"},
    {0x0212, "\x52"},
    {0x0213, "\x72"},
    {0x0214, "\x55"},
    {0x0215, "\x75"},
    {0x0216, "\x55"},
    {0x0217, "\x75"},
    {0x0218, "\x53"},
    {0x0219, "\x73"},
    {0x021A, "\x54"},
    {0x021B, "\x74"},
    {0x021E, "\x48"},
    {0x021F, "\x68"},
    {0x0226, "\x41"},
    {0x0227, "\x61"},
    {0x0228, "\x45"},
    {0x0229, "\x65"},
    {0x022A, "\x4f"},
    {0x022B, "\x6f"},
    {0x022C, "\x4f"},
    {0x022D, "\x6f"},
    {0x022E, "\x4f"},
    {0x022F, "\x6f"},
    {0x0230, "\x4f"},
    {0x0231, "\x6f"},
    {0x0232, "\x59"},
    {0x0233, "\x79"},
    {0x0300, ""},
    {0x0301, ""},
    {0x0302, ""},
    {0x0303, ""},
    {0x0304, ""},
    {0x0305, ""},
    {0x0306, ""},
    {0x0307, ""},
    {0x0308, ""},
    {0x0309, ""},
    {0x030A, ""},
    {0x030B, ""},
    {0x030C, ""},
    {0x030D, ""},
    {0x030E, ""},
    {0x030F, ""},
    {0x0310, ""},
    {0x0311, ""},
    {0x0312, ""},
    {0x0313, ""},
    {0x0314, ""},
    {0x0315, ""},
    {0x0316, ""},
    {0x0317, ""},
    {0x0318, ""},
    {0x0319, ""},
    {0x031A, ""},
    {0x031B, ""},
    {0x031C, ""},
    {0x031D, ""},
    {0x031E, ""},
    {0x031F, ""},
    {0x0320, ""},
    {0x0321, ""},
    {0x0322, ""},
    {0x0323, ""},
    {0x0324, ""},
    {0x0325, ""},
    {0x0326, ""},
    {0x0327, ""},
    {0x0328, ""},
    {0x0329, ""},
    {0x032A, ""},
    {0x032B, ""},
    {0x032C, ""},
    {0x032D, ""},
    {0x032E, ""},
    {0x032F, ""},
    {0x0330, ""},
    {0x0331, ""},
    {0x0332, ""},
    {0x0333, ""},
    {0x0334, ""},
    {0x0335, ""},
    {0x0336, ""},
    {0x0337, ""},
    {0x0338, ""},
    {0x0339, ""},
    {0x033A, ""},
    {0x033B, ""},
    {0x033C, ""},
    {0x033D, ""},
    {0x033E, ""},
    {0x033F, ""},
    {0x0340, ""},
    {0x0341, ""},
    {0x0342, ""},
    {0x0343, ""},
    {0x0344, ""},
    {0x0345, ""},
    {0x0346, ""},
    {0x0347, ""},
    {0x0348, ""},
    {0x0349, ""},
    {0x034A, ""},
    {0x034B, ""},
    {0x034C, ""},
    {0x034D, ""},
    {0x034E, ""},
    {0x034F, ""},
    {0x0350, ""},
    {0x0351, ""},
    {0x0352, ""},
    {0x0353, ""},
    {0x0354, ""},
    {0x0355, ""},
    {0x0356, ""},
    {0x0357, ""},
    {0x0358, ""},
    {0x0359, ""},
    {0x035A, ""},
    {0x035B, ""},
    {0x035C, ""},
    {0x035D, ""},
    {0x035E, ""},
    {0x035F, ""},
    {0x0360, ""},
    {0x0361, ""},
    {0x0362, ""},
    {0x0363, ""},
    {0x0364, ""},
    {0x0365, ""},
    {0x0366, ""},
    {0x0367, ""},
    {0x0368, ""},
    {0x0369, ""},
    {0x036A, ""},
    {0x036B, ""},
    {0x036C, ""},
    {0x036D, ""},
    {0x036E, ""},
    {0x036F, ""},
    {0x0374, "\xca\xb9"},
    {0x037E, "\x3b"},
    {0x0385, "\xc2\xa8"},
    {0x0386, "\xce\x91"},
    {0x0387, "\xc2\xb7"},
    {0x0388, "\xce\x95"},
    {0x0389, "\xce\x97"},
    {0x038A, "\xce\x99"},
    {0x038C, "\xce\x9f"},
    {0x038E, "\xce\xa5"},
    {0x038F, "\xce\xa9"},
    {0x0390, "\xce\xb9"},
    {0x03AA, "\xce\x99"},
    {0x03AB, "\xce\xa5"},
    {0x03AC, "\xce\xb1"},
    {0x03AD, "\xce\xb5"},
    {0x03AE, "\xce\xb7"},
    {0x03AF, "\xce\xb9"},
    {0x03B0, "\xcf\x85"},
    {0x03CA, "\xce\xb9"},
    {0x03CB, "\xcf\x85"},
    {0x03CC, "\xce\xbf"},
    {0x03CD, "\xcf\x85"},
    {0x03CE, "\xcf\x89"},
    {0x03D3, "\xcf\x92"},
    {0x03D4, "\xcf\x92"},
    {0x0400, "\xd0\x95"},
    {0x0401, "\xd0\x95"},
    {0x0403, "\xd0\x93"},
    {0x0407, "\xd0\x86"},
    {0x040C, "\xd0\x9a"},
    {0x040D, "\xd0\x98"},
    {0x040E, "\xd0\xa3"},
    {0x0419, "\xd0\x98"},
    {0x0439, "\xd0\xb8"},
    {0x0450, "\xd0\xb5"},
    {0x0451, "\xd0\xb5"},
    {0x0453, "\xd0\xb3"},
    {0x0457, "\xd1\x96"},
    {0x045C, "\xd0\xba"},
    {0x045D, "\xd0\xb8"},
    {0x045E, "\xd1\x83"},
    {0x0476, "\xd1\xb4"},
    {0x0477, "\xd1\xb5"},
    {0x0483, ""},
    {0x0484, ""},
    {0x0485, ""},
    {0x0486, ""},
    {0x0487, ""},
    {0x04C1, "\xd0\x96"},
    {0x04C2, "\xd0\xb6"},
    {0x04D0, "\xd0\x90"},
    {0x04D1, "\xd0\xb0"},
    {0x04D2, "\xd0\x90"},
    {0x04D3, "\xd0\xb0"},
    {0x04D6, "\xd0\x95"},
    {0x04D7, "\xd0\xb5"},
    {0x04DA, "\xd3\x98"},
    {0x04DB, "\xd3\x99"},
    {0x04DC, "\xd0\x96"},
    {0x04DD, "\xd0\xb6"},
    {0x04DE, "\xd0\x97"},
    {0x04DF, "\xd0\xb7"},
    {0x04E2, "\xd0\x98"},
    {0x04E3, "\xd0\xb8"},
    {0x04E4, "\xd0\x98"},
    {0x04E5, "\xd0\xb8"},
    {0x04E6, "\xd0\x9e"},
    {0x04E7, "\xd0\xbe"},
    {0x04EA, "\xd3\xa8"},
    {0x04EB, "\xd3\xa9"},
    {0x04EC, "\xd0\xad"},
    {0x04ED, "\xd1\x8d"},
    {0x04EE, "\xd0\xa3"},
    {0x04EF, "\xd1\x83"},
    {0x04F0, "\xd0\xa3"},
    {0x04F1, "\xd1\x83"},
    {0x04F2, "\xd0\xa3"},
    {0x04F3, "\xd1\x83"},
    {0x04F4, "\xd0\xa7"},
    {0x04F5, "\xd1\x87"},
    {0x04F8, "\xd0\xab"},
    {0x04F9, "\xd1\x8b"},
    {0x0591, ""},
    {0x0592, ""},
    {0x0593, ""},
    {0x0594, ""},
    {0x0595, ""},
    {0x0596, ""},
    {0x0597, ""},
    {0x0598, ""},
    {0x0599, ""},
    {0x059A, ""},
    {0x059B, ""},
    {0x059C, ""},
    {0x059D, ""},
    {0x059E, ""},
    {0x059F, ""},
    {0x05A0, ""},
    {0x05A1, ""},
    {0x05A2, ""},
    {0x05A3, ""},
    {0x05A4, ""},
    {0x05A5, ""},
    {0x05A6, ""},
    {0x05A7, ""},
    {0x05A8, ""},
    {0x05A9, ""},
    {0x05AA, ""},
    {0x05AB, ""},
    {0x05AC, ""},
    {0x05AD, ""},
    {0x05AE, ""},
    {0x05AF, ""},
    {0x05B0, ""},
    {0x05B1, ""},
    {0x05B2, ""},
    {0x05B3, ""},
    {0x05B4, ""},
    {0x05B5, ""},
    {0x05B6, ""},
    {0x05B7, ""},
    {0x05B8, ""},
    {0x05B9, ""},
    {0x05BA, ""},
    {0x05BB, ""},
    {0x05BC, ""},
    {0x05BD, ""},
    {0x05BF, ""},
    {0x05C1, ""},
    {0x05C2, ""},
    {0x05C4, ""},
    {0x05C5, ""},
    {0x05C7, ""},
    {0x0610, ""},
    {0x0611, ""},
    {0x0612, ""},
    {0x0613, ""},
    {0x0614, ""},
    {0x0615, ""},
    {0x0616, ""},
    {0x0617, ""},
    {0x0618, ""},
    {0x0619, ""},
    {0x061A, ""},
    {0x0622, "\xd8\xa7"},
    {0x0623, "\xd8\xa7"},
    {0x0624, "\xd9\x88"},
    {0x0625, "\xd8\xa7"},
    {0x0626, "\xd9\x8a"},
    {0x064B, ""},
    {0x064C, ""},
    {0x064D, ""},
    {0x064E, ""},
    {0x064F, ""},
    {0x0650, ""},
    {0x0651, ""},
    {0x0652, ""},
    {0x0653, ""},
    {0x0654, ""},
    {0x0655, ""},
    {0x0656, ""},
    {0x0657, ""},
    {0x0658, ""},
    {0x0659, ""},
    {0x065A, ""},
    {0x065B, ""},
    {0x065C, ""},
    {0x065D, ""},
    {0x065E, ""},
    {0x065F, ""},
    {0x0670, ""},
    {0x06C0, "\xdb\x95"},
    {0x06C2, "\xdb\x81"},
    {0x06D3, "\xdb\x92"},
    {0x06D6, ""},
    {0x06D7, ""},
    {0x06D8, ""},
    {0x06D9, ""},
    {0x06DA, ""},
    {0x06DB, ""},
    {0x06DC, ""},
    {0x06DF, ""},
    {0x06E0, ""},
    {0x06E1, ""},
    {0x06E2, ""},
    {0x06E3, ""},
    {0x06E4, ""},
    {0x06E7, ""},
    {0x06E8, ""},
    {0x06EA, ""},
    {0x06EB, ""},
    {0x06EC, ""},
    {0x06ED, ""},
    {0x0711, ""},
    {0x0730, ""},
    {0x0731, ""},
    {0x0732, ""},
    {0x0733, ""},
    {0x0734, ""},
    {0x0735, ""},
    {0x0736, ""},
    {0x0737, ""},
    {0x0738, ""},
    {0x0739, ""},
    {0x073A, ""},
    {0x073B, ""},
    {0x073C, ""},
    {0x073D, ""},
    {0x073E, ""},
    {0x073F, ""},
    {0x0740, ""},
    {0x0741, ""},
    {0x0742, ""},
    {0x0743, ""},
    {0x0744, ""},
    {0x0745, ""},
    {0x0746, ""},
    {0x0747, ""},
    {0x0748, ""},
    {0x0749, ""},
    {0x074A, ""},
    {0x07A6, ""},
    {0x07A7, ""},
    {0x07A8, ""},
    {0x07A9, ""},
    {0x07AA, ""},
    {0x07AB, ""},
    {0x07AC, ""},
    {0x07AD, ""},
    {0x07AE, ""},
    {0x07AF, ""},
    {0x07B0, ""},
    {0x07EB, ""},
    {0x07EC, ""},
    {0x07ED, ""},
    {0x07EE, ""},
    {0x07EF, ""},
    {0x07F0, ""},
    {0x07F1, ""},
    {0x07F2, ""},
    {0x07F3, ""},
    {0x07FD, ""},
    {0x0816, ""},
    {0x0817, ""},
    {0x0818, ""},
    {0x0819, ""},
    {0x081B, ""},
    {0x081C, ""},
    {0x081D, ""},
    {0x081E, ""},
    {0x081F, ""},
    {0x0820, ""},
    {0x0821, ""},
    {0x0822, ""},
    {0x0823, ""},
    {0x0825, ""},
    {0x0826, ""},
    {0x0827, ""},
    {0x0829, ""},
    {0x082A, ""},
    {0x082B, ""},
    {0x082C, ""},
    {0x082D, ""},
    {0x0859, ""},
    {0x085A, ""},
    {0x085B, ""},
    {0x08D3, ""},
    {0x08D4, ""},
    {0x08D5, ""},
    {0x08D6, ""},
    {0x08D7, ""},
    {0x08D8, ""},
    {0x08D9, ""},
    {0x08DA, ""},
    {0x08DB, ""},
    {0x08DC, ""},
    {0x08DD, ""},
    {0x08DE, ""},
    {0x08DF, ""},
    {0x08E0, ""},
    {0x08E1, ""},
    {0x08E3, ""},
    {0x08E4, ""},
    {0x08E5, ""},
    {0x08E6, ""},
    {0x08E7, ""},
    {0x08E8, ""},
    {0x08E9, ""},
    {0x08EA, ""},
    {0x08EB, ""},
    {0x08EC, ""},
    {0x08ED, ""},
    {0x08EE, ""},
    {0x08EF, ""},
    {0x08F0, ""},
    {0x08F1, ""},
    {0x08F2, ""},
    {0x08F3, ""},
    {0x08F4, ""},
    {0x08F5, ""},
    {0x08F6, ""},
    {0x08F7, ""},
    {0x08F8, ""},
    {0x08F9, ""},
    {0x08FA, ""},
    {0x08FB, ""},
    {0x08FC, ""},
    {0x08FD, ""},
    {0x08FE, ""},
    {0x08FF, ""},
    {0x0900, ""},
    {0x0901, ""},
    {0x0902, ""},
    {0x0929, "\xe0\xa4\xa8"},
    {0x0931, "\xe0\xa4\xb0"},
    {0x0934, "\xe0\xa4\xb3"},
    {0x093A, ""},
    {0x093C, ""},
    {0x0941, ""},
    {0x0942, ""},
    {0x0943, ""},
    {0x0944, ""},
    {0x0945, ""},
    {0x0946, ""},
    {0x0947, ""},
    {0x0948, ""},
    {0x094D, ""},
    {0x0951, ""},
    {0x0952, ""},
    {0x0953, ""},
    {0x0954, ""},
    {0x0955, ""},
    {0x0956, ""},
    {0x0957, ""},
    {0x0958, "\xe0\xa4\x95"},
    {0x0959, "\xe0\xa4\x96"},
    {0x095A, "\xe0\xa4\x97"},
    {0x095B, "\xe0\xa4\x9c"},
    {0x095C, "\xe0\xa4\xa1"},
    {0x095D, "\xe0\xa4\xa2"},
    {0x095E, "\xe0\xa4\xab"},
    {0x095F, "\xe0\xa4\xaf"},
    {0x0962, ""},
    {0x0963, ""},
    {0x0981, ""},
    {0x09BC, ""},
    {0x09C1, ""},
    {0x09C2, ""},
    {0x09C3, ""},
    {0x09C4, ""},
    {0x09CB, "\xe0\xa7\x87\xe0\xa6\xbe"},
    {0x09CC, "\xe0\xa7\x87\xe0\xa7\x97"},
    {0x09CD, ""},
    {0x09DC, "\xe0\xa6\xa1"},
    {0x09DD, "\xe0\xa6\xa2"},
    {0x09DF, "\xe0\xa6\xaf"},
    {0x09E2, ""},
    {0x09E3, ""},
    {0x09FE, ""},
    {0x0A01, ""},
    {0x0A02, ""},
    {0x0A33, "\xe0\xa8\xb2"},
    {0x0A36, "\xe0\xa8\xb8"},
    {0x0A3C, ""},
    {0x0A41, ""},
    {0x0A42, ""},
    {0x0A47, ""},
    {0x0A48, ""},
    {0x0A4B, ""},
    {0x0A4C, ""},
    {0x0A4D, ""},
    {0x0A51, ""},
    {0x0A59, "\xe0\xa8\x96"},
    {0x0A5A, "\xe0\xa8\x97"},
    {0x0A5B, "\xe0\xa8\x9c"},
    {0x0A5E, "\xe0\xa8\xab"},
    {0x0A70, ""},
    {0x0A71, ""},
    {0x0A75, ""},
    {0x0A81, ""},
    {0x0A82, ""},
    {0x0ABC, ""},
    {0x0AC1, ""},
    {0x0AC2, ""},
    {0x0AC3, ""},
    {0x0AC4, ""},
    {0x0AC5, ""},
    {0x0AC7, ""},
    {0x0AC8, ""},
    {0x0ACD, ""},
    {0x0AE2, ""},
    {0x0AE3, ""},
    {0x0AFA, ""},
    {0x0AFB, ""},
    {0x0AFC, ""},
    {0x0AFD, ""},
    {0x0AFE, ""},
    {0x0AFF, ""},
    {0x0B01, ""},
    {0x0B3C, ""},
    {0x0B3F, ""},
    {0x0B41, ""},
    {0x0B42, ""},
    {0x0B43, ""},
    {0x0B44, ""},
    {0x0B48, "\xe0\xad\x87"},
    {0x0B4B, "\xe0\xad\x87\xe0\xac\xbe"},
    {0x0B4C, "\xe0\xad\x87\xe0\xad\x97"},
    {0x0B4D, ""},
    {0x0B55, ""},
    {0x0B56, ""},
    {0x0B5C, "\xe0\xac\xa1"},
    {0x0B5D, "\xe0\xac\xa2"},
    {0x0B62, ""},
    {0x0B63, ""},
    {0x0B82, ""},
    {0x0B94, "\xe0\xae\x92\xe0\xaf\x97"},
    {0x0BC0, ""},
    {0x0BCA, "\xe0\xaf\x86\xe0\xae\xbe"},
    {0x0BCB, "\xe0\xaf\x87\xe0\xae\xbe"},
    {0x0BCC, "\xe0\xaf\x86\xe0\xaf\x97"},
    {0x0BCD, ""},
    {0x0C00, ""},
    {0x0C04, ""},
    {0x0C3E, ""},
    {0x0C3F, ""},
    {0x0C40, ""},
    {0x0C46, ""},
    {0x0C47, ""},
    {0x0C48, ""},
    {0x0C4A, ""},
    {0x0C4B, ""},
    {0x0C4C, ""},
    {0x0C4D, ""},
    {0x0C55, ""},
    {0x0C56, ""},
    {0x0C62, ""},
    {0x0C63, ""},
    {0x0C81, ""},
    {0x0CBC, ""},
    {0x0CBF, ""},
    {0x0CC0, "\xe0\xb3\x95"},
    {0x0CC6, ""},
    {0x0CC7, "\xe0\xb3\x95"},
    {0x0CC8, "\xe0\xb3\x96"},
    {0x0CCA, "\xe0\xb3\x82"},
    {0x0CCB, "\xe0\xb3\x82\xe0\xb3\x95"},
    {0x0CCC, ""},
    {0x0CCD, ""},
    {0x0CE2, ""},
    {0x0CE3, ""},
    {0x0D00, ""},
    {0x0D01, ""},
    {0x0D3B, ""},
    {0x0D3C, ""},
    {0x0D41, ""},
    {0x0D42, ""},
    {0x0D43, ""},
    {0x0D44, ""},
    {0x0D4A, "\xe0\xb5\x86\xe0\xb4\xbe"},
    {0x0D4B, "\xe0\xb5\x87\xe0\xb4\xbe"},
    {0x0D4C, "\xe0\xb5\x86\xe0\xb5\x97"},
    {0x0D4D, ""},
    {0x0D62, ""},
    {0x0D63, ""},
    {0x0D81, ""},
    {0x0DCA, ""},
    {0x0DD2, ""},
    {0x0DD3, ""},
    {0x0DD4, ""},
    {0x0DD6, ""},
    {0x0DDA, "\xe0\xb7\x99"},
    {0x0DDC, "\xe0\xb7\x99\xe0\xb7\x8f"},
    {0x0DDD, "\xe0\xb7\x99\xe0\xb7\x8f"},
    {0x0DDE, "\xe0\xb7\x99\xe0\xb7\x9f"},
    {0x0E31, ""},
    {0x0E34, ""},
    {0x0E35, ""},
    {0x0E36, ""},
    {0x0E37, ""},
    {0x0E38, ""},
    {0x0E39, ""},
    {0x0E3A, ""},
    {0x0E47, ""},
    {0x0E48, ""},
    {0x0E49, ""},
    {0x0E4A, ""},
    {0x0E4B, ""},
    {0x0E4C, ""},
    {0x0E4D, ""},
    {0x0E4E, ""},
    {0x0EB1, ""},
    {0x0EB4, ""},
    {0x0EB5, ""},
    {0x0EB6, ""},
    {0x0EB7, ""},
    {0x0EB8, ""},
    {0x0EB9, ""},
    {0x0EBA, ""},
    {0x0EBB, ""},
    {0x0EBC, ""},
    {0x0EC8, ""},
    {0x0EC9, ""},
    {0x0ECA, ""},
    {0x0ECB, ""},
    {0x0ECC, ""},
    {0x0ECD, ""},
    {0x0F18, ""},
    {0x0F19, ""},
    {0x0F35, ""},
    {0x0F37, ""},
    {0x0F39, ""},
    {0x0F43, "\xe0\xbd\x82"},
    {0x0F4D, "\xe0\xbd\x8c"},
    {0x0F52, "\xe0\xbd\x91"},
    {0x0F57, "\xe0\xbd\x96"},
    {0x0F5C, "\xe0\xbd\x9b"},
    {0x0F69, "\xe0\xbd\x80"},
    {0x0F71, ""},
    {0x0F72, ""},
    {0x0F73, ""},
    {0x0F74, ""},
    {0x0F75, ""},
    {0x0F76, ""},
    {0x0F77, ""},
    {0x0F78, ""},
    {0x0F79, ""},
    {0x0F7A, ""},
    {0x0F7B, ""},
    {0x0F7C, ""},
    {0x0F7D, ""},
    {0x0F7E, ""},
    {0x0F80, ""},
    {0x0F81, ""},
    {0x0F82, ""},
    {0x0F83, ""},
    {0x0F84, ""},
    {0x0F86, ""},
    {0x0F87, ""},
    {0x0F8D, ""},
    {0x0F8E, ""},
    {0x0F8F, ""},
    {0x0F90, ""},
    {0x0F91, ""},
    {0x0F92, ""},
    {0x0F93, ""},
    {0x0F94, ""},
    {0x0F95, ""},
    {0x0F96, ""},
    {0x0F97, ""},
    {0x0F99, ""},
    {0x0F9A, ""},
    {0x0F9B, ""},
    {0x0F9C, ""},
    {0x0F9D, ""},
    {0x0F9E, ""},
    {0x0F9F, ""},
    {0x0FA0, ""},
    {0x0FA1, ""},
    {0x0FA2, ""},
    {0x0FA3, ""},
    {0x0FA4, ""},
    {0x0FA5, ""},
    {0x0FA6, ""},
    {0x0FA7, ""},
    {0x0FA8, ""},
    {0x0FA9, ""},
    {0x0FAA, ""},
    {0x0FAB, ""},
    {0x0FAC, ""},
    {0x0FAD, ""},
    {0x0FAE, ""},
    {0x0FAF, ""},
    {0x0FB0, ""},
    {0x0FB1, ""},
    {0x0FB2, ""},
    {0x0FB3, ""},
    {0x0FB4, ""},
    {0x0FB5, ""},
    {0x0FB6, ""},
    {0x0FB7, ""},
    {0x0FB8, ""},
    {0x0FB9, ""},
    {0x0FBA, ""},
    {0x0FBB, ""},
    {0x0FBC, ""},
    {0x0FC6, ""},
    {0x1026, "\xe1\x80\xa5"},
    {0x102D, ""},
    {0x102E, ""},
    {0x102F, ""},
    {0x1030, ""},
    {0x1032, ""},
    {0x1033, ""},
    {0x1034, ""},
    {0x1035, ""},
    {0x1036, ""},
    {0x1037, ""},
    {0x1039, ""},
    {0x103A, ""},
    {0x103D, ""},
    {0x103E, ""},
    {0x1058, ""},
    {0x1059, ""},
    {0x105E, ""},
    {0x105F, ""},
    {0x1060, ""},
    {0x1071, ""},
    {0x1072, ""},
    {0x1073, ""},
    {0x1074, ""},
    {0x1082, ""},
    {0x1085, ""},
    {0x1086, ""},
    {0x108D, ""},
    {0x109D, ""},
    {0x135D, ""},
    {0x135E, ""},
    {0x135F, ""},
    {0x1712, ""},
    {0x1713, ""},
    {0x1714, ""},
    {0x1732, ""},
    {0x1733, ""},
    {0x1734, ""},
    {0x1752, ""},
    {0x1753, ""},
    {0x1772, ""},
    {0x1773, ""},
    {0x17B4, ""},
    {0x17B5, ""},
    {0x17B7, ""},
    {0x17B8, ""},
    {0x17B9, ""},
    {0x17BA, ""},
    {0x17BB, ""},
    {0x17BC, ""},
    {0x17BD, ""},
    {0x17C6, ""},
    {0x17C9, ""},
    {0x17CA, ""},
    {0x17CB, ""},
    {0x17CC, ""},
    {0x17CD, ""},
    {0x17CE, ""},
    {0x17CF, ""},
    {0x17D0, ""},
    {0x17D1, ""},
    {0x17D2, ""},
    {0x17D3, ""},
    {0x17DD, ""},
    {0x180B, ""},
    {0x180C, ""},
    {0x180D, ""},
    {0x1885, ""},
    {0x1886, ""},
    {0x18A9, ""},
    {0x1920, ""},
    {0x1921, ""},
    {0x1922, ""},
    {0x1927, ""},
    {0x1928, ""},
    {0x1932, ""},
    {0x1939, ""},
    {0x193A, ""},
    {0x193B, ""},
    {0x1A17, ""},
    {0x1A18, ""},
    {0x1A1B, ""},
    {0x1A56, ""},
    {0x1A58, ""},
    {0x1A59, ""},
    {0x1A5A, ""},
    {0x1A5B, ""},
    {0x1A5C, ""},
    {0x1A5D, ""},
    {0x1A5E, ""},
    {0x1A60, ""},
    {0x1A62, ""},
    {0x1A65, ""},
    {0x1A66, ""},
    {0x1A67, ""},
    {0x1A68, ""},
    {0x1A69, ""},
    {0x1A6A, ""},
    {0x1A6B, ""},
    {0x1A6C, ""},
    {0x1A73, ""},
    {0x1A74, ""},
    {0x1A75, ""},
    {0x1A76, ""},
    {0x1A77, ""},
    {0x1A78, ""},
    {0x1A79, ""},
    {0x1A7A, ""},
    {0x1A7B, ""},
    {0x1A7C, ""},
    {0x1A7F, ""},
    {0x1AB0, ""},
    {0x1AB1, ""},
    {0x1AB2, ""},
    {0x1AB3, ""},
    {0x1AB4, ""},
    {0x1AB5, ""},
    {0x1AB6, ""},
    {0x1AB7, ""},
    {0x1AB8, ""},
    {0x1AB9, ""},
    {0x1ABA, ""},
    {0x1ABB, ""},
    {0x1ABC, ""},
    {0x1ABD, ""},
    {0x1ABF, ""},
    {0x1AC0, ""},
    {0x1B00, ""},
    {0x1B01, ""},
    {0x1B02, ""},
    {0x1B03, ""},
    {0x1B06, "\xe1\xac\x85\xe1\xac\xb5"},
    {0x1B08, "\xe1\xac\x87\xe1\xac\xb5"},
    {0x1B0A, "\xe1\xac\x89\xe1\xac\xb5"},
    {0x1B0C, "\xe1\xac\x8b\xe1\xac\xb5"},
    {0x1B0E, "\xe1\xac\x8d\xe1\xac\xb5"},
    {0x1B12, "\xe1\xac\x91\xe1\xac\xb5"},
    {0x1B34, ""},
    {0x1B36, ""},
    {0x1B37, ""},
    {0x1B38, ""},
    {0x1B39, ""},
    {0x1B3A, ""},
    {0x1B3B, "\xe1\xac\xb5"},
    {0x1B3C, ""},
    {0x1B3D, "\xe1\xac\xb5"},
    {0x1B40, "\xe1\xac\xbe\xe1\xac\xb5"},
    {0x1B41, "\xe1\xac\xbf\xe1\xac\xb5"},
    {0x1B42, ""},
    {0x1B43, "\xe1\xac\xb5"},
    {0x1B6B, ""},
    {0x1B6C, ""},
    {0x1B6D, ""},
    {0x1B6E, ""},
    {0x1B6F, ""},
    {0x1B70, ""},
    {0x1B71, ""},
    {0x1B72, ""},
    {0x1B73, ""},
    {0x1B80, ""},
    {0x1B81, ""},
    {0x1BA2, ""},
    {0x1BA3, ""},
    {0x1BA4, ""},
    {0x1BA5, ""},
    {0x1BA8, ""},
    {0x1BA9, ""},
    {0x1BAB, ""},
    {0x1BAC, ""},
    {0x1BAD, ""},
    {0x1BE6, ""},
    {0x1BE8, ""},
    {0x1BE9, ""},
    {0x1BED, ""},
    {0x1BEF, ""},
    {0x1BF0, ""},
    {0x1BF1, ""},
    {0x1C2C, ""},
    {0x1C2D, ""},
    {0x1C2E, ""},
    {0x1C2F, ""},
    {0x1C30, ""},
    {0x1C31, ""},
    {0x1C32, ""},
    {0x1C33, ""},
    {0x1C36, ""},
    {0x1C37, ""},
    {0x1CD0, ""},
    {0x1CD1, ""},
    {0x1CD2, ""},
    {0x1CD4, ""},
    {0x1CD5, ""},
    {0x1CD6, ""},
    {0x1CD7, ""},
    {0x1CD8, ""},
    {0x1CD9, ""},
    {0x1CDA, ""},
    {0x1CDB, ""},
    {0x1CDC, ""},
    {0x1CDD, ""},
    {0x1CDE, ""},
    {0x1CDF, ""},
    {0x1CE0, ""},
    {0x1CE2, ""},
    {0x1CE3, ""},
    {0x1CE4, ""},
    {0x1CE5, ""},
    {0x1CE6, ""},
    {0x1CE7, ""},
    {0x1CE8, ""},
    {0x1CED, ""},
    {0x1CF4, ""},
    {0x1CF8, ""},
    {0x1CF9, ""},
    {0x1DC0, ""},
    {0x1DC1, ""},
    {0x1DC2, ""},
    {0x1DC3, ""},
    {0x1DC4, ""},
    {0x1DC5, ""},
    {0x1DC6, ""},
    {0x1DC7, ""},
    {0x1DC8, ""},
    {0x1DC9, ""},
    {0x1DCA, ""},
    {0x1DCB, ""},
    {0x1DCC, ""},
    {0x1DCD, ""},
    {0x1DCE, ""},
    {0x1DCF, ""},
    {0x1DD0, ""},
    {0x1DD1, ""},
    {0x1DD2, ""},
    {0x1DD3, ""},
    {0x1DD4, ""},
    {0x1DD5, ""},
    {0x1DD6, ""},
    {0x1DD7, ""},
    {0x1DD8, ""},
    {0x1DD9, ""},
    {0x1DDA, ""},
    {0x1DDB, ""},
    {0x1DDC, ""},
    {0x1DDD, ""},
    {0x1DDE, ""},
    {0x1DDF, ""},
    {0x1DE0, ""},
    {0x1DE1, ""},
    {0x1DE2, ""},
    {0x1DE3, ""},
    {0x1DE4, ""},
    {0x1DE5, ""},
    {0x1DE6, ""},
    {0x1DE7, ""},
    {0x1DE8, ""},
    {0x1DE9, ""},
    {0x1DEA, ""},
    {0x1DEB, ""},
    {0x1DEC, ""},
    {0x1DED, ""},
    {0x1DEE, ""},
    {0x1DEF, ""},
    {0x1DF0, ""},
    {0x1DF1, ""},
    {0x1DF2, ""},
    {0x1DF3, ""},
    {0x1DF4, ""},
    {0x1DF5, ""},
    {0x1DF6, ""},
    {0x1DF7, ""},
    {0x1DF8, ""},
    {0x1DF9, ""},
    {0x1DFB, ""},
    {0x1DFC, ""},
    {0x1DFD, ""},
    {0x1DFE, ""},
    {0x1DFF, ""},
    {0x1E00, "\x41"},
    {0x1E01, "\x61"},
    {0x1E02, "\x42"},
    {0x1E03, "\x62"},
    {0x1E04, "\x42"},
    {0x1E05, "\x62"},
    {0x1E06, "\x42"},
    {0x1E07, "\x62"},
    {0x1E08, "\x43"},
    {0x1E09, "\x63"},
    {0x1E0A, "\x44"},
    {0x1E0B, "\x64"},
    {0x1E0C, "\x44"},
    {0x1E0D, "\x64"},
    {0x1E0E, "\x44"},
    {0x1E0F, "\x64"},
    {0x1E10, "\x44"},
    {0x1E11, "\x64"},
    {0x1E12, "\x44"},
    {0x1E13, "\x64"},
    {0x1E14, "\x45"},
    {0x1E15, "\x65"},
    {0x1E16, "\x45"},
    {0x1E17, "\x65"},
    {0x1E18, "\x45"},
    {0x1E19, "\x65"},
    {0x1E1A, "\x45"},
    {0x1E1B, "\x65"},
    {0x1E1C, "\x45"},
    {0x1E1D, "\x65"},
    {0x1E1E, "\x46"},
    {0x1E1F, "\x66"},
    {0x1E20, "\x47"},
    {0x1E21, "\x67"},
    {0x1E22, "\x48"},
    {0x1E23, "\x68"},
    {0x1E24, "\x48"},
    {0x1E25, "\x68"},
    {0x1E26, "\x48"},
    {0x1E27, "\x68"},
    {0x1E28, "\x48"},
    {0x1E29, "\x68"},
    {0x1E2A, "\x48"},
    {0x1E2B, "\x68"},
    {0x1E2C, "\x49"},
    {0x1E2D, "\x69"},
    {0x1E2E, "\x49"},
    {0x1E2F, "\x69"},
    {0x1E30, "\x4b"},
    {0x1E31, "\x6b"},
    {0x1E32, "\x4b"},
    {0x1E33, "\x6b"},
    {0x1E34, "\x4b"},
    {0x1E35, "\x6b"},
    {0x1E36, "\x4c"},
    {0x1E37, "\x6c"},
    {0x1E38, "\x4c"},
    {0x1E39, "\x6c"},
    {0x1E3A, "\x4c"},
    {0x1E3B, "\x6c"},
    {0x1E3C, "\x4c"},
    {0x1E3D, "\x6c"},
    {0x1E3E, "\x4d"},
    {0x1E3F, "\x6d"},
    {0x1E40, "\x4d"},
    {0x1E41, "\x6d"},
    {0x1E42, "\x4d"},
    {0x1E43, "\x6d"},
    {0x1E44, "\x4e"},
    {0x1E45, "\x6e"},
    {0x1E46, "\x4e"},
    {0x1E47, "\x6e"},
    {0x1E48, "\x4e"},
    {0x1E49, "\x6e"},
    {0x1E4A, "\x4e"},
    {0x1E4B, "\x6e"},
    {0x1E4C, "\x4f"},
    {0x1E4D, "\x6f"},
    {0x1E4E, "\x4f"},
    {0x1E4F, "\x6f"},
    {0x1E50, "\x4f"},
    {0x1E51, "\x6f"},
    {0x1E52, "\x4f"},
    {0x1E53, "\x6f"},
    {0x1E54, "\x50"},
    {0x1E55, "\x70"},
    {0x1E56, "\x50"},
    {0x1E57, "\x70"},
    {0x1E58, "\x52"},
    {0x1E59, "\x72"},
    {0x1E5A, "\x52"},
    {0x1E5B, "\x72"},
    {0x1E5C, "\x52"},
    {0x1E5D, "\x72"},
    {0x1E5E, "\x52"},
    {0x1E5F, "\x72"},
    {0x1E60, "\x53"},
    {0x1E61, "\x73"},
    {0x1E62, "\x53"},
    {0x1E63, "\x73"},
    {0x1E64, "\x53"},
    {0x1E65, "\x73"},
    {0x1E66, "\x53"},
    {0x1E67, "\x73"},
    {0x1E68, "\x53"},
    {0x1E69, "\x73"},
    {0x1E6A, "\x54"},
    {0x1E6B, "\x74"},
    {0x1E6C, "\x54"},
    {0x1E6D, "\x74"},
    {0x1E6E, "\x54"},
    {0x1E6F, "\x74"},
    {0x1E70, "\x54"},
    {0x1E71, "\x74"},
    {0x1E72, "\x55"},
    {0x1E73, "\x75"},
    {0x1E74, "\x55"},
    {0x1E75, "\x75"},
    {0x1E76, "\x55"},
    {0x1E77, "\x75"},
    {0x1E78, "\x55"},
    {0x1E79, "\x75"},
    {0x1E7A, "\x55"},
    {0x1E7B, "\x75"},
    {0x1E7C, "\x56"},
    {0x1E7D, "\x76"},
    {0x1E7E, "\x56"},
    {0x1E7F, "\x76"},
    {0x1E80, "\x57"},
    {0x1E81, "\x77"},
    {0x1E82, "\x57"},
    {0x1E83, "\x77"},
    {0x1E84, "\x57"},
    {0x1E85, "\x77"},
    {0x1E86, "\x57"},
    {0x1E87, "\x77"},
    {0x1E88, "\x57"},
    {0x1E89, "\x77"},
    {0x1E8A, "\x58"},
    {0x1E8B, "\x78"},
    {0x1E8C, "\x58"},
    {0x1E8D, "\x78"},
    {0x1E8E, "\x59"},
    {0x1E8F, "\x79"},
    {0x1E90, "\x5a"},
    {0x1E91, "\x7a"},
    {0x1E92, "\x5a"},
    {0x1E93, "\x7a"},
    {0x1E94, "\x5a"},
    {0x1E95, "\x7a"},
    {0x1E96, "\x68"},
    {0x1E97, "\x74"},
    {0x1E98, "\x77"},
    {0x1E99, "\x79"},
    {0x1E9B, "\xc5\xbf"},
    {0x1EA0, "\x41"},
    {0x1EA1, "\x61"},
    {0x1EA2, "\x41"},
    {0x1EA3, "\x61"},
    {0x1EA4, "\x41"},
    {0x1EA5, "\x61"},
    {0x1EA6, "\x41"},
    {0x1EA7, "\x61"},
    {0x1EA8, "\x41"},
    {0x1EA9, "\x61"},
    {0x1EAA, "\x41"},
    {0x1EAB, "\x61"},
    {0x1EAC, "\x41"},
    {0x1EAD, "\x61"},
    {0x1EAE, "\x41"},
    {0x1EAF, "\x61"},
    {0x1EB0, "\x41"},
    {0x1EB1, "\x61"},
    {0x1EB2, "\x41"},
    {0x1EB3, "\x61"},
    {0x1EB4, "\x41"},
    {0x1EB5, "\x61"},
    {0x1EB6, "\x41"},
    {0x1EB7, "\x61"},
    {0x1EB8, "\x45"},
    {0x1EB9, "\x65"},
    {0x1EBA, "\x45"},
    {0x1EBB, "\x65"},
    {0x1EBC, "\x45"},
    {0x1EBD, "\x65"},
    {0x1EBE, "\x45"},
    {0x1EBF, "\x65"},
    {0x1EC0, "\x45"},
    {0x1EC1, "\x65"},
    {0x1EC2, "\x45"},
    {0x1EC3, "\x65"},
    {0x1EC4, "\x45"},
    {0x1EC5, "\x65"},
    {0x1EC6, "\x45"},
    {0x1EC7, "\x65"},
    {0x1EC8, "\x49"},
    {0x1EC9, "\x69"},
    {0x1ECA, "\x49"},
    {0x1ECB, "\x69"},
    {0x1ECC, "\x4f"},
    {0x1ECD, "\x6f"},
    {0x1ECE, "\x4f"},
    {0x1ECF, "\x6f"},
    {0x1ED0, "\x4f"},
    {0x1ED1, "\x6f"},
    {0x1ED2, "\x4f"},
    {0x1ED3, "\x6f"},
    {0x1ED4, "\x4f"},
    {0x1ED5, "\x6f"},
    {0x1ED6, "\x4f"},
    {0x1ED7, "\x6f"},
    {0x1ED8, "\x4f"},
    {0x1ED9, "\x6f"},
    {0x1EDA, "\x4f"},
    {0x1EDB, "\x6f"},
    {0x1EDC, "\x4f"},
    {0x1EDD, "\x6f"},
    {0x1EDE, "\x4f"},
    {0x1EDF, "\x6f"},
    {0x1EE0, "\x4f"},
    {0x1EE1, "\x6f"},
    {0x1EE2, "\x4f"},
    {0x1EE3, "\x6f"},
    {0x1EE4, "\x55"},
    {0x1EE5, "\x75"},
    {0x1EE6, "\x55"},
    {0x1EE7, "\x75"},
    {0x1EE8, "\x55"},
    {0x1EE9, "\x75"},
    {0x1EEA, "\x55"},
    {0x1EEB, "\x75"},
    {0x1EEC, "\x55"},
    {0x1EED, "\x75"},
    {0x1EEE, "\x55"},
    {0x1EEF, "\x75"},
    {0x1EF0, "\x55"},
    {0x1EF1, "\x75"},
    {0x1EF2, "\x59"},
    {0x1EF3, "\x79"},
    {0x1EF4, "\x59"},
    {0x1EF5, "\x79"},
    {0x1EF6, "\x59"},
    {0x1EF7, "\x79"},
    {0x1EF8, "\x59"},
    {0x1EF9, "\x79"},
    {0x1F00, "\xce\xb1"},
    {0x1F01, "\xce\xb1"},
    {0x1F02, "\xce\xb1"},
    {0x1F03, "\xce\xb1"},
    {0x1F04, "\xce\xb1"},
    {0x1F05, "\xce\xb1"},
    {0x1F06, "\xce\xb1"},
    {0x1F07, "\xce\xb1"},
    {0x1F08, "\xce\x91"},
    {0x1F09, "\xce\x91"},
    {0x1F0A, "\xce\x91"},
    {0x1F0B, "\xce\x91"},
    {0x1F0C, "\xce\x91"},
    {0x1F0D, "\xce\x91"},
    {0x1F0E, "\xce\x91"},
    {0x1F0F, "\xce\x91"},
    {0x1F10, "\xce\xb5"},
    {0x1F11, "\xce\xb5"},
    {0x1F12, "\xce\xb5"},
    {0x1F13, "\xce\xb5"},
    {0x1F14, "\xce\xb5"},
    {0x1F15, "\xce\xb5"},
    {0x1F18, "\xce\x95"},
    {0x1F19, "\xce\x95"},
    {0x1F1A, "\xce\x95"},
    {0x1F1B, "\xce\x95"},
    {0x1F1C, "\xce\x95"},
    {0x1F1D, "\xce\x95"},
    {0x1F20, "\xce\xb7"},
    {0x1F21, "\xce\xb7"},
    {0x1F22, "\xce\xb7"},
    {0x1F23, "\xce\xb7"},
    {0x1F24, "\xce\xb7"},
    {0x1F25, "\xce\xb7"},
    {0x1F26, "\xce\xb7"},
    {0x1F27, "\xce\xb7"},
    {0x1F28, "\xce\x97"},
    {0x1F29, "\xce\x97"},
    {0x1F2A, "\xce\x97"},
    {0x1F2B, "\xce\x97"},
    {0x1F2C, "\xce\x97"},
    {0x1F2D, "\xce\x97"},
    {0x1F2E, "\xce\x97"},
    {0x1F2F, "\xce\x97"},
    {0x1F30, "\xce\xb9"},
    {0x1F31, "\xce\xb9"},
    {0x1F32, "\xce\xb9"},
    {0x1F33, "\xce\xb9"},
    {0x1F34, "\xce\xb9"},
    {0x1F35, "\xce\xb9"},
    {0x1F36, "\xce\xb9"},
    {0x1F37, "\xce\xb9"},
    {0x1F38, "\xce\x99"},
    {0x1F39, "\xce\x99"},
    {0x1F3A, "\xce\x99"},
    {0x1F3B, "\xce\x99"},
    {0x1F3C, "\xce\x99"},
    {0x1F3D, "\xce\x99"},
    {0x1F3E, "\xce\x99"},
    {0x1F3F, "\xce\x99"},
    {0x1F40, "\xce\xbf"},
    {0x1F41, "\xce\xbf"},
    {0x1F42, "\xce\xbf"},
    {0x1F43, "\xce\xbf"},
    {0x1F44, "\xce\xbf"},
    {0x1F45, "\xce\xbf"},
    {0x1F48, "\xce\x9f"},
    {0x1F49, "\xce\x9f"},
    {0x1F4A, "\xce\x9f"},
    {0x1F4B, "\xce\x9f"},
    {0x1F4C, "\xce\x9f"},
    {0x1F4D, "\xce\x9f"},
    {0x1F50, "\xcf\x85"},
    {0x1F51, "\xcf\x85"},
    {0x1F52, "\xcf\x85"},
    {0x1F53, "\xcf\x85"},
    {0x1F54, "\xcf\x85"},
    {0x1F55, "\xcf\x85"},
    {0x1F56, "\xcf\x85"},
    {0x1F57, "\xcf\x85"},
    {0x1F59, "\xce\xa5"},
    {0x1F5B, "\xce\xa5"},
    {0x1F5D, "\xce\xa5"},
    {0x1F5F, "\xce\xa5"},
    {0x1F60, "\xcf\x89"},
    {0x1F61, "\xcf\x89"},
    {0x1F62, "\xcf\x89"},
    {0x1F63, "\xcf\x89"},
    {0x1F64, "\xcf\x89"},
    {0x1F65, "\xcf\x89"},
    {0x1F66, "\xcf\x89"},
    {0x1F67, "\xcf\x89"},
    {0x1F68, "\xce\xa9"},
    {0x1F69, "\xce\xa9"},
    {0x1F6A, "\xce\xa9"},
    {0x1F6B, "\xce\xa9"},
    {0x1F6C, "\xce\xa9"},
    {0x1F6D, "\xce\xa9"},
    {0x1F6E, "\xce\xa9"},
    {0x1F6F, "\xce\xa9"},
    {0x1F70, "\xce\xb1"},
    {0x1F71, "\xce\xb1"},
    {0x1F72, "\xce\xb5"},
    {0x1F73, "\xce\xb5"},
    {0x1F74, "\xce\xb7"},
    {0x1F75, "\xce\xb7"},
    {0x1F76, "\xce\xb9"},
    {0x1F77, "\xce\xb9"},
    {0x1F78, "\xce\xbf"},
    {0x1F79, "\xce\xbf"},
    {0x1F7A, "\xcf\x85"},
    {0x1F7B, "\xcf\x85"},
    {0x1F7C, "\xcf\x89"},
    {0x1F7D, "\xcf\x89"},
    {0x1F80, "\xce\xb1"},
    {0x1F81, "\xce\xb1"},
    {0x1F82, "\xce\xb1"},
    {0x1F83, "\xce\xb1"},
    {0x1F84, "\xce\xb1"},
    {0x1F85, "\xce\xb1"},
    {0x1F86, "\xce\xb1"},
    {0x1F87, "\xce\xb1"},
    {0x1F88, "\xce\x91"},
    {0x1F89, "\xce\x91"},
    {0x1F8A, "\xce\x91"},
    {0x1F8B, "\xce\x91"},
    {0x1F8C, "\xce\x91"},
    {0x1F8D, "\xce\x91"},
    {0x1F8E, "\xce\x91"},
    {0x1F8F, "\xce\x91"},
    {0x1F90, "\xce\xb7"},
    {0x1F91, "\xce\xb7"},
    {0x1F92, "\xce\xb7"},
    {0x1F93, "\xce\xb7"},
    {0x1F94, "\xce\xb7"},
    {0x1F95, "\xce\xb7"},
    {0x1F96, "\xce\xb7"},
    {0x1F97, "\xce\xb7"},
    {0x1F98, "\xce\x97"},
    {0x1F99, "\xce\x97"},
    {0x1F9A, "\xce\x97"},
    {0x1F9B, "\xce\x97"},
    {0x1F9C, "\xce\x97"},
    {0x1F9D, "\xce\x97"},
    {0x1F9E, "\xce\x97"},
    {0x1F9F, "\xce\x97"},
    {0x1FA0, "\xcf\x89"},
    {0x1FA1, "\xcf\x89"},
    {0x1FA2, "\xcf\x89"},
    {0x1FA3, "\xcf\x89"},
    {0x1FA4, "\xcf\x89"},
    {0x1FA5, "\xcf\x89"},
    {0x1FA6, "\xcf\x89"},
    {0x1FA7, "\xcf\x89"},
    {0x1FA8, "\xce\xa9"},
    {0x1FA9, "\xce\xa9"},
    {0x1FAA, "\xce\xa9"},
    {0x1FAB, "\xce\xa9"},
    {0x1FAC, "\xce\xa9"},
    {0x1FAD, "\xce\xa9"},
    {0x1FAE, "\xce\xa9"},
    {0x1FAF, "\xce\xa9"},
    {0x1FB0, "\xce\xb1"},
    {0x1FB1, "\xce\xb1"},
    {0x1FB2, "\xce\xb1"},
    {0x1FB3, "\xce\xb1"},
    {0x1FB4, "\xce\xb1"},
    {0x1FB6, "\xce\xb1"},
    {0x1FB7, "\xce\xb1"},
    {0x1FB8, "\xce\x91"},
    {0x1FB9, "\xce\x91"},
    {0x1FBA, "\xce\x91"},
    {0x1FBB, "\xce\x91"},
    {0x1FBC, "\xce\x91"},
    {0x1FBE, "\xce\xb9"},
    {0x1FC1, "\xc2\xa8"},
    {0x1FC2, "\xce\xb7"},
    {0x1FC3, "\xce\xb7"},
    {0x1FC4, "\xce\xb7"},
    {0x1FC6, "\xce\xb7"},
    {0x1FC7, "\xce\xb7"},
    {0x1FC8, "\xce\x95"},
    {0x1FC9, "\xce\x95"},
    {0x1FCA, "\xce\x97"},
    {0x1FCB, "\xce\x97"},
    {0x1FCC, "\xce\x97"},
    {0x1FCD, "\xe1\xbe\xbf"},
    {0x1FCE, "\xe1\xbe\xbf"},
    {0x1FCF, "\xe1\xbe\xbf"},
    {0x1FD0, "\xce\xb9"},
    {0x1FD1, "\xce\xb9"},
    {0x1FD2, "\xce\xb9"},
    {0x1FD3, "\xce\xb9"},
    {0x1FD6, "\xce\xb9"},
    {0x1FD7, "\xce\xb9"},
    {0x1FD8, "\xce\x99"},
    {0x1FD9, "\xce\x99"},
    {0x1FDA, "\xce\x99"},
    {0x1FDB, "\xce\x99"},
    {0x1FDD, "\xe1\xbf\xbe"},
    {0x1FDE, "\xe1\xbf\xbe"},
    {0x1FDF, "\xe1\xbf\xbe"},
    {0x1FE0, "\xcf\x85"},
    {0x1FE1, "\xcf\x85"},
    {0x1FE2, "\xcf\x85"},
    {0x1FE3, "\xcf\x85"},
    {0x1FE4, "\xcf\x81"},
    {0x1FE5, "\xcf\x81"},
    {0x1FE6, "\xcf\x85"},
    {0x1FE7, "\xcf\x85"},
    {0x1FE8, "\xce\xa5"},
    {0x1FE9, "\xce\xa5"},
    {0x1FEA, "\xce\xa5"},
    {0x1FEB, "\xce\xa5"},
    {0x1FEC, "\xce\xa1"},
    {0x1FED, "\xc2\xa8"},
    {0x1FEE, "\xc2\xa8"},
    {0x1FEF, "\x60"},
    {0x1FF2, "\xcf\x89"},
    {0x1FF3, "\xcf\x89"},
    {0x1FF4, "\xcf\x89"},
    {0x1FF6, "\xcf\x89"},
    {0x1FF7, "\xcf\x89"},
    {0x1FF8, "\xce\x9f"},
    {0x1FF9, "\xce\x9f"},
    {0x1FFA, "\xce\xa9"},
    {0x1FFB, "\xce\xa9"},
    {0x1FFC, "\xce\xa9"},
    {0x1FFD, "\xc2\xb4"},
    {0x2000, "\xe2\x80\x82"},
    {0x2001, "\xe2\x80\x83"},
    {0x20D0, ""},
    {0x20D1, ""},
    {0x20D2, ""},
    {0x20D3, ""},
    {0x20D4, ""},
    {0x20D5, ""},
    {0x20D6, ""},
    {0x20D7, ""},
    {0x20D8, ""},
    {0x20D9, ""},
    {0x20DA, ""},
    {0x20DB, ""},
    {0x20DC, ""},
    {0x20E1, ""},
    {0x20E5, ""},
    {0x20E6, ""},
    {0x20E7, ""},
    {0x20E8, ""},
    {0x20E9, ""},
    {0x20EA, ""},
    {0x20EB, ""},
    {0x20EC, ""},
    {0x20ED, ""},
    {0x20EE, ""},
    {0x20EF, ""},
    {0x20F0, ""},
    {0x2126, "\xce\xa9"},
    {0x212A, "\x4b"},
    {0x212B, "\x41"},
    {0x219A, "\xe2\x86\x90"},
    {0x219B, "\xe2\x86\x92"},
    {0x21AE, "\xe2\x86\x94"},
    {0x21CD, "\xe2\x87\x90"},
    {0x21CE, "\xe2\x87\x94"},
    {0x21CF, "\xe2\x87\x92"},
    {0x2204, "\xe2\x88\x83"},
    {0x2209, "\xe2\x88\x88"},
    {0x220C, "\xe2\x88\x8b"},
    {0x2224, "\xe2\x88\xa3"},
    {0x2226, "\xe2\x88\xa5"},
    {0x2241, "\xe2\x88\xbc"},
    {0x2244, "\xe2\x89\x83"},
    {0x2247, "\xe2\x89\x85"},
    {0x2249, "\xe2\x89\x88"},
    {0x2260, "\x3d"},
    {0x2262, "\xe2\x89\xa1"},
    {0x226D, "\xe2\x89\x8d"},
    {0x226E, "\x3c"},
    {0x226F, "\x3e"},
    {0x2270, "\xe2\x89\xa4"},
    {0x2271, "\xe2\x89\xa5"},
    {0x2274, "\xe2\x89\xb2"},
    {0x2275, "\xe2\x89\xb3"},
    {0x2278, "\xe2\x89\xb6"},
    {0x2279, "\xe2\x89\xb7"},
    {0x2280, "\xe2\x89\xba"},
    {0x2281, "\xe2\x89\xbb"},
    {0x2284, "\xe2\x8a\x82"},
    {0x2285, "\xe2\x8a\x83"},
    {0x2288, "\xe2\x8a\x86"},
    {0x2289, "\xe2\x8a\x87"},
    {0x22AC, "\xe2\x8a\xa2"},
    {0x22AD, "\xe2\x8a\xa8"},
    {0x22AE, "\xe2\x8a\xa9"},
    {0x22AF, "\xe2\x8a\xab"},
    {0x22E0, "\xe2\x89\xbc"},
    {0x22E1, "\xe2\x89\xbd"},
    {0x22E2, "\xe2\x8a\x91"},
    {0x22E3, "\xe2\x8a\x92"},
    {0x22EA, "\xe2\x8a\xb2"},
    {0x22EB, "\xe2\x8a\xb3"},
    {0x22EC, "\xe2\x8a\xb4"},
    {0x22ED, "\xe2\x8a\xb5"},
    {0x2329, "\xe3\x80\x88"},
    {0x232A, "\xe3\x80\x89"},
    {0x2ADC, "\xe2\xab\x9d"},
    {0x2CEF, ""},
    {0x2CF0, ""},
    {0x2CF1, ""},
    {0x2D7F, ""},
    {0x2DE0, ""},
    {0x2DE1, ""},
    {0x2DE2, ""},
    {0x2DE3, ""},
    {0x2DE4, ""},
    {0x2DE5, ""},
    {0x2DE6, ""},
    {0x2DE7, ""},
    {0x2DE8, ""},
    {0x2DE9, ""},
    {0x2DEA, ""},
    {0x2DEB, ""},
    {0x2DEC, ""},
    {0x2DED, ""},
    {0x2DEE, ""},
    {0x2DEF, ""},
    {0x2DF0, ""},
    {0x2DF1, ""},
    {0x2DF2, ""},
    {0x2DF3, ""},
    {0x2DF4, ""},
    {0x2DF5, ""},
    {0x2DF6, ""},
    {0x2DF7, ""},
    {0x2DF8, ""},
    {0x2DF9, ""},
    {0x2DFA, ""},
    {0x2DFB, ""},
    {0x2DFC, ""},
    {0x2DFD, ""},
    {0x2DFE, ""},
    {0x2DFF, ""},
    {0x302A, ""},
    {0x302B, ""},
    {0x302C, ""},
    {0x302D, ""},
    {0x304C, "\xe3\x81\x8b"},
    {0x304E, "\xe3\x81\x8d"},
    {0x3050, "\xe3\x81\x8f"},
    {0x3052, "\xe3\x81\x91"},
    {0x3054, "\xe3\x81\x93"},
    {0x3056, "\xe3\x81\x95"},
    {0x3058, "\xe3\x81\x97"},
    {0x305A, "\xe3\x81\x99"},
    {0x305C, "\xe3\x81\x9b"},
    {0x305E, "\xe3\x81\x9d"},
    {0x3060, "\xe3\x81\x9f"},
    {0x3062, "\xe3\x81\xa1"},
    {0x3065, "\xe3\x81\xa4"},
    {0x3067, "\xe3\x81\xa6"},
    {0x3069, "\xe3\x81\xa8"},
    {0x3070, "\xe3\x81\xaf"},
    {0x3071, "\xe3\x81\xaf"},
    {0x3073, "\xe3\x81\xb2"},
    {0x3074, "\xe3\x81\xb2"},
    {0x3076, "\xe3\x81\xb5"},
    {0x3077, "\xe3\x81\xb5"},
    {0x3079, "\xe3\x81\xb8"},
    {0x307A, "\xe3\x81\xb8"},
    {0x307C, "\xe3\x81\xbb"},
    {0x307D, "\xe3\x81\xbb"},
    {0x3094, "\xe3\x81\x86"},
    {0x3099, ""},
    {0x309A, ""},
    {0x309E, "\xe3\x82\x9d"},
    {0x30AC, "\xe3\x82\xab"},
    {0x30AE, "\xe3\x82\xad"},
    {0x30B0, "\xe3\x82\xaf"},
    {0x30B2, "\xe3\x82\xb1"},
    {0x30B4, "\xe3\x82\xb3"},
    {0x30B6, "\xe3\x82\xb5"},
    {0x30B8, "\xe3\x82\xb7"},
    {0x30BA, "\xe3\x82\xb9"},
    {0x30BC, "\xe3\x82\xbb"},
    {0x30BE, "\xe3\x82\xbd"},
    {0x30C0, "\xe3\x82\xbf"},
    {0x30C2, "\xe3\x83\x81"},
    {0x30C5, "\xe3\x83\x84"},
    {0x30C7, "\xe3\x83\x86"},
    {0x30C9, "\xe3\x83\x88"},
    {0x30D0, "\xe3\x83\x8f"},
    {0x30D1, "\xe3\x83\x8f"},
    {0x30D3, "\xe3\x83\x92"},
    {0x30D4, "\xe3\x83\x92"},
    {0x30D6, "\xe3\x83\x95"},
    {0x30D7, "\xe3\x83\x95"},
    {0x30D9, "\xe3\x83\x98"},
    {0x30DA, "\xe3\x83\x98"},
    {0x30DC, "\xe3\x83\x9b"},
    {0x30DD, "\xe3\x83\x9b"},
    {0x30F4, "\xe3\x82\xa6"},
    {0x30F7, "\xe3\x83\xaf"},
    {0x30F8, "\xe3\x83\xb0"},
    {0x30F9, "\xe3\x83\xb1"},
    {0x30FA, "\xe3\x83\xb2"},
    {0x30FE, "\xe3\x83\xbd"},
    {0xA66F, ""},
    {0xA674, ""},
    {0xA675, ""},
    {0xA676, ""},
    {0xA677, ""},
    {0xA678, ""},
    {0xA679, ""},
    {0xA67A, ""},
    {0xA67B, ""},
    {0xA67C, ""},
    {0xA67D, ""},
    {0xA69E, ""},
    {0xA69F, ""},
    {0xA6F0, ""},
    {0xA6F1, ""},
    {0xA802, ""},
    {0xA806, ""},
    {0xA80B, ""},
    {0xA825, ""},
    {0xA826, ""},
    {0xA82C, ""},
    {0xA8C4, ""},
    {0xA8C5, ""},
    {0xA8E0, ""},
    {0xA8E1, ""},
    {0xA8E2, ""},
    {0xA8E3, ""},
    {0xA8E4, ""},
    {0xA8E5, ""},
    {0xA8E6, ""},
    {0xA8E7, ""},
    {0xA8E8, ""},
    {0xA8E9, ""},
    {0xA8EA, ""},
    {0xA8EB, ""},
    {0xA8EC, ""},
    {0xA8ED, ""},
    {0xA8EE, ""},
    {0xA8EF, ""},
    {0xA8F0, ""},
    {0xA8F1, ""},
    {0xA8FF, ""},
    {0xA926, ""},
    {0xA927, ""},
    {0xA928, ""},
    {0xA929, ""},
    {0xA92A, ""},
    {0xA92B, ""},
    {0xA92C, ""},
    {0xA92D, ""},
    {0xA947, ""},
    {0xA948, ""},
    {0xA949, ""},
    {0xA94A, ""},
    {0xA94B, ""},
    {0xA94C, ""},
    {0xA94D, ""},
    {0xA94E, ""},
    {0xA94F, ""},
    {0xA950, ""},
    {0xA951, ""},
    {0xA980, ""},
    {0xA981, ""},
    {0xA982, ""},
    {0xA9B3, ""},
    {0xA9B6, ""},
    {0xA9B7, ""},
    {0xA9B8, ""},
    {0xA9B9, ""},
    {0xA9BC, ""},
    {0xA9BD, ""},
    {0xA9E5, ""},
    {0xAA29, ""},
    {0xAA2A, ""},
    {0xAA2B, ""},
    {0xAA2C, ""},
    {0xAA2D, ""},
    {0xAA2E, ""},
    {0xAA31, ""},
    {0xAA32, ""},
    {0xAA35, ""},
    {0xAA36, ""},
    {0xAA43, ""},
    {0xAA4C, ""},
    {0xAA7C, ""},
    {0xAAB0, ""},
    {0xAAB2, ""},
    {0xAAB3, ""},
    {0xAAB4, ""},
    {0xAAB7, ""},
    {0xAAB8, ""},
    {0xAABE, ""},
    {0xAABF, ""},
    {0xAAC1, ""},
    {0xAAEC, ""},
    {0xAAED, ""},
    {0xAAF6, ""},
    {0xABE5, ""},
    {0xABE8, ""},
    {0xABED, ""},
    {0xF900, "\xe8\xb1\x88"},
    {0xF901, "\xe6\x9b\xb4"},
    {0xF902, "\xe8\xbb\x8a"},
    {0xF903, "\xe8\xb3\x88"},
    {0xF904, "\xe6\xbb\x91"},
    {0xF905, "\xe4\xb8\xb2"},
    {0xF906, "\xe5\x8f\xa5"},
    {0xF907, "\xe9\xbe\x9c"},
    {0xF908, "\xe9\xbe\x9c"},
    {0xF909, "\xe5\xa5\x91"},
    {0xF90A, "\xe9\x87\x91"},
    {0xF90B, "\xe5\x96\x87"},
    {0xF90C, "\xe5\xa5\x88"},
    {0xF90D, "\xe6\x87\xb6"},
    {0xF90E, "\xe7\x99\xa9"},
    {0xF90F, "\xe7\xbe\x85"},
    {0xF910, "\xe8\x98\xbf"},
    {0xF911, "\xe8\x9e\xba"},
    {0xF912, "\xe8\xa3\xb8"},
    {0xF913, "\xe9\x82\x8f"},
    {0xF914, "\xe6\xa8\x82"},
    {0xF915, "\xe6\xb4\x9b"},
    {0xF916, "\xe7\x83\x99"},
    {0xF917, "\xe7\x8f\x9e"},
    {0xF918, "\xe8\x90\xbd"},
    {0xF919, "\xe9\x85\xaa"},
    {0xF91A, "\xe9\xa7\xb1"},
    {0xF91B, "\xe4\xba\x82"},
    {0xF91C, "\xe5\x8d\xb5"},
    {0xF91D, "\xe6\xac\x84"},
    {0xF91E, "\xe7\x88\x9b"},
    {0xF91F, "\xe8\x98\xad"},
    {0xF920, "\xe9\xb8\x9e"},
    {0xF921, "\xe5\xb5\x90"},
    {0xF922, "\xe6\xbf\xab"},
    {0xF923, "\xe8\x97\x8d"},
    {0xF924, "\xe8\xa5\xa4"},
    {0xF925, "\xe6\x8b\x89"},
    {0xF926, "\xe8\x87\x98"},
    {0xF927, "\xe8\xa0\x9f"},
    {0xF928, "\xe5\xbb\x8a"},
    {0xF929, "\xe6\x9c\x97"},
    {0xF92A, "\xe6\xb5\xaa"},
    {0xF92B, "\xe7\x8b\xbc"},
    {0xF92C, "\xe9\x83\x8e"},
    {0xF92D, "\xe4\xbe\x86"},
    {0xF92E, "\xe5\x86\xb7"},
    {0xF92F, "\xe5\x8b\x9e"},
    {0xF930, "\xe6\x93\x84"},
    {0xF931, "\xe6\xab\x93"},
    {0xF932, "\xe7\x88\x90"},
    {0xF933, "\xe7\x9b\xa7"},
    {0xF934, "\xe8\x80\x81"},
    {0xF935, "\xe8\x98\x86"},
    {0xF936, "\xe8\x99\x9c"},
    {0xF937, "\xe8\xb7\xaf"},
    {0xF938, "\xe9\x9c\xb2"},
    {0xF939, "\xe9\xad\xaf"},
    {0xF93A, "\xe9\xb7\xba"},
    {0xF93B, "\xe7\xa2\x8c"},
    {0xF93C, "\xe7\xa5\xbf"},
    {0xF93D, "\xe7\xb6\xa0"},
    {0xF93E, "\xe8\x8f\x89"},
    {0xF93F, "\xe9\x8c\x84"},
    {0xF940, "\xe9\xb9\xbf"},
    {0xF941, "\xe8\xab\x96"},
    {0xF942, "\xe5\xa3\x9f"},
    {0xF943, "\xe5\xbc\x84"},
    {0xF944, "\xe7\xb1\xa0"},
    {0xF945, "\xe8\x81\xbe"},
    {0xF946, "\xe7\x89\xa2"},
    {0xF947, "\xe7\xa3\x8a"},
    {0xF948, "\xe8\xb3\x82"},
    {0xF949, "\xe9\x9b\xb7"},
    {0xF94A, "\xe5\xa3\x98"},
    {0xF94B, "\xe5\xb1\xa2"},
    {0xF94C, "\xe6\xa8\x93"},
    {0xF94D, "\xe6\xb7\x9a"},
    {0xF94E, "\xe6\xbc\x8f"},
    {0xF94F, "\xe7\xb4\xaf"},
    {0xF950, "\xe7\xb8\xb7"},
    {0xF951, "\xe9\x99\x8b"},
    {0xF952, "\xe5\x8b\x92"},
    {0xF953, "\xe8\x82\x8b"},
    {0xF954, "\xe5\x87\x9c"},
    {0xF955, "\xe5\x87\x8c"},
    {0xF956, "\xe7\xa8\x9c"},
    {0xF957, "\xe7\xb6\xbe"},
    {0xF958, "\xe8\x8f\xb1"},
    {0xF959, "\xe9\x99\xb5"},
    {0xF95A, "\xe8\xae\x80"},
    {0xF95B, "\xe6\x8b\x8f"},
    {0xF95C, "\xe6\xa8\x82"},
    {0xF95D, "\xe8\xab\xbe"},
    {0xF95E, "\xe4\xb8\xb9"},
    {0xF95F, "\xe5\xaf\xa7"},
    {0xF960, "\xe6\x80\x92"},
    {0xF961, "\xe7\x8e\x87"},
    {0xF962, "\xe7\x95\xb0"},
    {0xF963, "\xe5\x8c\x97"},
    {0xF964, "\xe7\xa3\xbb"},
    {0xF965, "\xe4\xbe\xbf"},
    {0xF966, "\xe5\xbe\xa9"},
    {0xF967, "\xe4\xb8\x8d"},
    {0xF968, "\xe6\xb3\x8c"},
    {0xF969, "\xe6\x95\xb8"},
    {0xF96A, "\xe7\xb4\xa2"},
    {0xF96B, "\xe5\x8f\x83"},
    {0xF96C, "\xe5\xa1\x9e"},
    {0xF96D, "\xe7\x9c\x81"},
    {0xF96E, "\xe8\x91\x89"},
    {0xF96F, "\xe8\xaa\xaa"},
    {0xF970, "\xe6\xae\xba"},
    {0xF971, "\xe8\xbe\xb0"},
    {0xF972, "\xe6\xb2\x88"},
    {0xF973, "\xe6\x8b\xbe"},
    {0xF974, "\xe8\x8b\xa5"},
    {0xF975, "\xe6\x8e\xa0"},
    {0xF976, "\xe7\x95\xa5"},
    {0xF977, "\xe4\xba\xae"},
    {0xF978, "\xe5\x85\xa9"},
    {0xF979, "\xe5\x87\x89"},
    {0xF97A, "\xe6\xa2\x81"},
    {0xF97B, "\xe7\xb3\xa7"},
    {0xF97C, "\xe8\x89\xaf"},
    {0xF97D, "\xe8\xab\x92"},
    {0xF97E, "\xe9\x87\x8f"},
    {0xF97F, "\xe5\x8b\xb5"},
    {0xF980, "\xe5\x91\x82"},
    {0xF981, "\xe5\xa5\xb3"},
    {0xF982, "\xe5\xbb\xac"},
    {0xF983, "\xe6\x97\x85"},
    {0xF984, "\xe6\xbf\xbe"},
    {0xF985, "\xe7\xa4\xaa"},
    {0xF986, "\xe9\x96\xad"},
    {0xF987, "\xe9\xa9\xaa"},
    {0xF988, "\xe9\xba\x97"},
    {0xF989, "\xe9\xbb\x8e"},
    {0xF98A, "\xe5\x8a\x9b"},
    {0xF98B, "\xe6\x9b\x86"},
    {0xF98C, "\xe6\xad\xb7"},
    {0xF98D, "\xe8\xbd\xa2"},
    {0xF98E, "\xe5\xb9\xb4"},
    {0xF98F, "\xe6\x86\x90"},
    {0xF990, "\xe6\x88\x80"},
    {0xF991, "\xe6\x92\x9a"},
    {0xF992, "\xe6\xbc\xa3"},
    {0xF993, "\xe7\x85\x89"},
    {0xF994, "\xe7\x92\x89"},
    {0xF995, "\xe7\xa7\x8a"},
    {0xF996, "\xe7\xb7\xb4"},
    {0xF997, "\xe8\x81\xaf"},
    {0xF998, "\xe8\xbc\xa6"},
    {0xF999, "\xe8\x93\xae"},
    {0xF99A, "\xe9\x80\xa3"},
    {0xF99B, "\xe9\x8d\x8a"},
    {0xF99C, "\xe5\x88\x97"},
    {0xF99D, "\xe5\x8a\xa3"},
    {0xF99E, "\xe5\x92\xbd"},
    {0xF99F, "\xe7\x83\x88"},
    {0xF9A0, "\xe8\xa3\x82"},
    {0xF9A1, "\xe8\xaa\xaa"},
    {0xF9A2, "\xe5\xbb\x89"},
    {0xF9A3, "\xe5\xbf\xb5"},
    {0xF9A4, "\xe6\x8d\xbb"},
    {0xF9A5, "\xe6\xae\xae"},
    {0xF9A6, "\xe7\xb0\xbe"},
    {0xF9A7, "\xe7\x8d\xb5"},
    {0xF9A8, "\xe4\xbb\xa4"},
    {0xF9A9, "\xe5\x9b\xb9"},
    {0xF9AA, "\xe5\xaf\xa7"},
    {0xF9AB, "\xe5\xb6\xba"},
    {0xF9AC, "\xe6\x80\x9c"},
    {0xF9AD, "\xe7\x8e\xb2"},
    {0xF9AE, "\xe7\x91\xa9"},
    {0xF9AF, "\xe7\xbe\x9a"},
    {0xF9B0, "\xe8\x81\x86"},
    {0xF9B1, "\xe9\x88\xb4"},
    {0xF9B2, "\xe9\x9b\xb6"},
    {0xF9B3, "\xe9\x9d\x88"},
    {0xF9B4, "\xe9\xa0\x98"},
    {0xF9B5, "\xe4\xbe\x8b"},
    {0xF9B6, "\xe7\xa6\xae"},
    {0xF9B7, "\xe9\x86\xb4"},
    {0xF9B8, "\xe9\x9a\xb8"},
    {0xF9B9, "\xe6\x83\xa1"},
    {0xF9BA, "\xe4\xba\x86"},
    {0xF9BB, "\xe5\x83\x9a"},
    {0xF9BC, "\xe5\xaf\xae"},
    {0xF9BD, "\xe5\xb0\xbf"},
    {0xF9BE, "\xe6\x96\x99"},
    {0xF9BF, "\xe6\xa8\x82"},
    {0xF9C0, "\xe7\x87\x8e"},
    {0xF9C1, "\xe7\x99\x82"},
    {0xF9C2, "\xe8\x93\xbc"},
    {0xF9C3, "\xe9\x81\xbc"},
    {0xF9C4, "\xe9\xbe\x8d"},
    {0xF9C5, "\xe6\x9a\x88"},
    {0xF9C6, "\xe9\x98\xae"},
    {0xF9C7, "\xe5\x8a\x89"},
    {0xF9C8, "\xe6\x9d\xbb"},
    {0xF9C9, "\xe6\x9f\xb3"},
    {0xF9CA, "\xe6\xb5\x81"},
    {0xF9CB, "\xe6\xba\x9c"},
    {0xF9CC, "\xe7\x90\x89"},
    {0xF9CD, "\xe7\x95\x99"},
    {0xF9CE, "\xe7\xa1\xab"},
    {0xF9CF, "\xe7\xb4\x90"},
    {0xF9D0, "\xe9\xa1\x9e"},
    {0xF9D1, "\xe5\x85\xad"},
    {0xF9D2, "\xe6\x88\xae"},
    {0xF9D3, "\xe9\x99\xb8"},
    {0xF9D4, "\xe5\x80\xab"},
    {0xF9D5, "\xe5\xb4\x99"},
    {0xF9D6, "\xe6\xb7\xaa"},
    {0xF9D7, "\xe8\xbc\xaa"},
    {0xF9D8, "\xe5\xbe\x8b"},
    {0xF9D9, "\xe6\x85\x84"},
    {0xF9DA, "\xe6\xa0\x97"},
    {0xF9DB, "\xe7\x8e\x87"},
    {0xF9DC, "\xe9\x9a\x86"},
    {0xF9DD, "\xe5\x88\xa9"},
    {0xF9DE, "\xe5\x90\x8f"},
    {0xF9DF, "\xe5\xb1\xa5"},
    {0xF9E0, "\xe6\x98\x93"},
    {0xF9E1, "\xe6\x9d\x8e"},
    {0xF9E2, "\xe6\xa2\xa8"},
    {0xF9E3, "\xe6\xb3\xa5"},
    {0xF9E4, "\xe7\x90\x86"},
    {0xF9E5, "\xe7\x97\xa2"},
    {0xF9E6, "\xe7\xbd\xb9"},
    {0xF9E7, "\xe8\xa3\x8f"},
    {0xF9E8, "\xe8\xa3\xa1"},
    {0xF9E9, "\xe9\x87\x8c"},
    {0xF9EA, "\xe9\x9b\xa2"},
    {0xF9EB, "\xe5\x8c\xbf"},
    {0xF9EC, "\xe6\xba\xba"},
    {0xF9ED, "\xe5\x90\x9d"},
    {0xF9EE, "\xe7\x87\x90"},
    {0xF9EF, "\xe7\x92\x98"},
    {0xF9F0, "\xe8\x97\xba"},
    {0xF9F1, "\xe9\x9a\xa3"},
    {0xF9F2, "\xe9\xb1\x97"},
    {0xF9F3, "\xe9\xba\x9f"},
    {0xF9F4, "\xe6\x9e\x97"},
    {0xF9F5, "\xe6\xb7\x8b"},
    {0xF9F6, "\xe8\x87\xa8"},
    {0xF9F7, "\xe7\xab\x8b"},
    {0xF9F8, "\xe7\xac\xa0"},
    {0xF9F9, "\xe7\xb2\x92"},
    {0xF9FA, "\xe7\x8b\x80"},
    {0xF9FB, "\xe7\x82\x99"},
    {0xF9FC, "\xe8\xad\x98"},
    {0xF9FD, "\xe4\xbb\x80"},
    {0xF9FE, "\xe8\x8c\xb6"},
    {0xF9FF, "\xe5\x88\xba"},
    {0xFA00, "\xe5\x88\x87"},
    {0xFA01, "\xe5\xba\xa6"},
    {0xFA02, "\xe6\x8b\x93"},
    {0xFA03, "\xe7\xb3\x96"},
    {0xFA04, "\xe5\xae\x85"},
    {0xFA05, "\xe6\xb4\x9e"},
    {0xFA06, "\xe6\x9a\xb4"},
    {0xFA07, "\xe8\xbc\xbb"},
    {0xFA08, "\xe8\xa1\x8c"},
    {0xFA09, "\xe9\x99\x8d"},
    {0xFA0A, "\xe8\xa6\x8b"},
    {0xFA0B, "\xe5\xbb\x93"},
    {0xFA0C, "\xe5\x85\x80"},
    {0xFA0D, "\xe5\x97\x80"},
    {0xFA10, "\xe5\xa1\x9a"},
    {0xFA12, "\xe6\x99\xb4"},
    {0xFA15, "\xe5\x87\x9e"},
    {0xFA16, "\xe7\x8c\xaa"},
    {0xFA17, "\xe7\x9b\x8a"},
    {0xFA18, "\xe7\xa4\xbc"},
    {0xFA19, "\xe7\xa5\x9e"},
    {0xFA1A, "\xe7\xa5\xa5"},
    {0xFA1B, "\xe7\xa6\x8f"},
    {0xFA1C, "\xe9\x9d\x96"},
    {0xFA1D, "\xe7\xb2\xbe"},
    {0xFA1E, "\xe7\xbe\xbd"},
    {0xFA20, "\xe8\x98\x92"},
    {0xFA22, "\xe8\xab\xb8"},
    {0xFA25, "\xe9\x80\xb8"},
    {0xFA26, "\xe9\x83\xbd"},
    {0xFA2A, "\xe9\xa3\xaf"},
    {0xFA2B, "\xe9\xa3\xbc"},
    {0xFA2C, "\xe9\xa4\xa8"},
    {0xFA2D, "\xe9\xb6\xb4"},
    {0xFA2E, "\xe9\x83\x9e"},
    {0xFA2F, "\xe9\x9a\xb7"},
    {0xFA30, "\xe4\xbe\xae"},
    {0xFA31, "\xe5\x83\xa7"},
    {0xFA32, "\xe5\x85\x8d"},
    {0xFA33, "\xe5\x8b\x89"},
    {0xFA34, "\xe5\x8b\xa4"},
    {0xFA35, "\xe5\x8d\x91"},
    {0xFA36, "\xe5\x96\x9d"},
    {0xFA37, "\xe5\x98\x86"},
    {0xFA38, "\xe5\x99\xa8"},
    {0xFA39, "\xe5\xa1\x80"},
    {0xFA3A, "\xe5\xa2\xa8"},
    {0xFA3B, "\xe5\xb1\xa4"},
    {0xFA3C, "\xe5\xb1\xae"},
    {0xFA3D, "\xe6\x82\x94"},
    {0xFA3E, "\xe6\x85\xa8"},
    {0xFA3F, "\xe6\x86\x8e"},
    {0xFA40, "\xe6\x87\xb2"},
    {0xFA41, "\xe6\x95\x8f"},
    {0xFA42, "\xe6\x97\xa2"},
    {0xFA43, "\xe6\x9a\x91"},
    {0xFA44, "\xe6\xa2\x85"},
    {0xFA45, "\xe6\xb5\xb7"},
    {0xFA46, "\xe6\xb8\x9a"},
    {0xFA47, "\xe6\xbc\xa2"},
    {0xFA48, "\xe7\x85\xae"},
    {0xFA49, "\xe7\x88\xab"},
    {0xFA4A, "\xe7\x90\xa2"},
    {0xFA4B, "\xe7\xa2\x91"},
    {0xFA4C, "\xe7\xa4\xbe"},
    {0xFA4D, "\xe7\xa5\x89"},
    {0xFA4E, "\xe7\xa5\x88"},
    {0xFA4F, "\xe7\xa5\x90"},
    {0xFA50, "\xe7\xa5\x96"},
    {0xFA51, "\xe7\xa5\x9d"},
    {0xFA52, "\xe7\xa6\x8d"},
    {0xFA53, "\xe7\xa6\x8e"},
    {0xFA54, "\xe7\xa9\x80"},
    {0xFA55, "\xe7\xaa\x81"},
    {0xFA56, "\xe7\xaf\x80"},
    {0xFA57, "\xe7\xb7\xb4"},
    {0xFA58, "\xe7\xb8\x89"},
    {0xFA59, "\xe7\xb9\x81"},
    {0xFA5A, "\xe7\xbd\xb2"},
    {0xFA5B, "\xe8\x80\x85"},
    {0xFA5C, "\xe8\x87\xad"},
    {0xFA5D, "\xe8\x89\xb9"},
    {0xFA5E, "\xe8\x89\xb9"},
    {0xFA5F, "\xe8\x91\x97"},
    {0xFA60, "\xe8\xa4\x90"},
    {0xFA61, "\xe8\xa6\x96"},
    {0xFA62, "\xe8\xac\x81"},
    {0xFA63, "\xe8\xac\xb9"},
    {0xFA64, "\xe8\xb3\x93"},
    {0xFA65, "\xe8\xb4\x88"},
    {0xFA66, "\xe8\xbe\xb6"},
    {0xFA67, "\xe9\x80\xb8"},
    {0xFA68, "\xe9\x9b\xa3"},
    {0xFA69, "\xe9\x9f\xbf"},
    {0xFA6A, "\xe9\xa0\xbb"},
    {0xFA6B, "\xe6\x81\xb5"},
    {0xFA6C, "\xf0\xa4\x8b\xae"},
    {0xFA6D, "\xe8\x88\x98"},
    {0xFA70, "\xe4\xb8\xa6"},
    {0xFA71, "\xe5\x86\xb5"},
    {0xFA72, "\xe5\x85\xa8"},
    {0xFA73, "\xe4\xbe\x80"},
    {0xFA74, "\xe5\x85\x85"},
    {0xFA75, "\xe5\x86\x80"},
    {0xFA76, "\xe5\x8b\x87"},
    {0xFA77, "\xe5\x8b\xba"},
    {0xFA78, "\xe5\x96\x9d"},
    {0xFA79, "\xe5\x95\x95"},
    {0xFA7A, "\xe5\x96\x99"},
    {0xFA7B, "\xe5\x97\xa2"},
    {0xFA7C, "\xe5\xa1\x9a"},
    {0xFA7D, "\xe5\xa2\xb3"},
    {0xFA7E, "\xe5\xa5\x84"},
    {0xFA7F, "\xe5\xa5\x94"},
    {0xFA80, "\xe5\xa9\xa2"},
    {0xFA81, "\xe5\xac\xa8"},
    {0xFA82, "\xe5\xbb\x92"},
    {0xFA83, "\xe5\xbb\x99"},
    {0xFA84, "\xe5\xbd\xa9"},
    {0xFA85, "\xe5\xbe\xad"},
    {0xFA86, "\xe6\x83\x98"},
    {0xFA87, "\xe6\x85\x8e"},
    {0xFA88, "\xe6\x84\x88"},
    {0xFA89, "\xe6\x86\x8e"},
    {0xFA8A, "\xe6\x85\xa0"},
    {0xFA8B, "\xe6\x87\xb2"},
    {0xFA8C, "\xe6\x88\xb4"},
    {0xFA8D, "\xe6\x8f\x84"},
    {0xFA8E, "\xe6\x90\x9c"},
    {0xFA8F, "\xe6\x91\x92"},
    {0xFA90, "\xe6\x95\x96"},
    {0xFA91, "\xe6\x99\xb4"},
    {0xFA92, "\xe6\x9c\x97"},
    {0xFA93, "\xe6\x9c\x9b"},
    {0xFA94, "\xe6\x9d\x96"},
    {0xFA95, "\xe6\xad\xb9"},
    {0xFA96, "\xe6\xae\xba"},
    {0xFA97, "\xe6\xb5\x81"},
    {0xFA98, "\xe6\xbb\x9b"},
    {0xFA99, "\xe6\xbb\x8b"},
    {0xFA9A, "\xe6\xbc\xa2"},
    {0xFA9B, "\xe7\x80\x9e"},
    {0xFA9C, "\xe7\x85\xae"},
    {0xFA9D, "\xe7\x9e\xa7"},
    {0xFA9E, "\xe7\x88\xb5"},
    {0xFA9F, "\xe7\x8a\xaf"},
    {0xFAA0, "\xe7\x8c\xaa"},
    {0xFAA1, "\xe7\x91\xb1"},
    {0xFAA2, "\xe7\x94\x86"},
    {0xFAA3, "\xe7\x94\xbb"},
    {0xFAA4, "\xe7\x98\x9d"},
    {0xFAA5, "\xe7\x98\x9f"},
    {0xFAA6, "\xe7\x9b\x8a"},
    {0xFAA7, "\xe7\x9b\x9b"},
    {0xFAA8, "\xe7\x9b\xb4"},
    {0xFAA9, "\xe7\x9d\x8a"},
    {0xFAAA, "\xe7\x9d\x80"},
    {0xFAAB, "\xe7\xa3\x8c"},
    {0xFAAC, "\xe7\xaa\xb1"},
    {0xFAAD, "\xe7\xaf\x80"},
    {0xFAAE, "\xe7\xb1\xbb"},
    {0xFAAF, "\xe7\xb5\x9b"},
    {0xFAB0, "\xe7\xb7\xb4"},
    {0xFAB1, "\xe7\xbc\xbe"},
    {0xFAB2, "\xe8\x80\x85"},
    {0xFAB3, "\xe8\x8d\x92"},
    {0xFAB4, "\xe8\x8f\xaf"},
    {0xFAB5, "\xe8\x9d\xb9"},
    {0xFAB6, "\xe8\xa5\x81"},
    {0xFAB7, "\xe8\xa6\x86"},
    {0xFAB8, "\xe8\xa6\x96"},
    {0xFAB9, "\xe8\xaa\xbf"},
    {0xFABA, "\xe8\xab\xb8"},
    {0xFABB, "\xe8\xab\x8b"},
    {0xFABC, "\xe8\xac\x81"},
    {0xFABD, "\xe8\xab\xbe"},
    {0xFABE, "\xe8\xab\xad"},
    {0xFABF, "\xe8\xac\xb9"},
    {0xFAC0, "\xe8\xae\x8a"},
    {0xFAC1, "\xe8\xb4\x88"},
    {0xFAC2, "\xe8\xbc\xb8"},
    {0xFAC3, "\xe9\x81\xb2"},
    {0xFAC4, "\xe9\x86\x99"},
    {0xFAC5, "\xe9\x89\xb6"},
    {0xFAC6, "\xe9\x99\xbc"},
    {0xFAC7, "\xe9\x9b\xa3"},
    {0xFAC8, "\xe9\x9d\x96"},
    {0xFAC9, "\xe9\x9f\x9b"},
    {0xFACA, "\xe9\x9f\xbf"},
    {0xFACB, "\xe9\xa0\x8b"},
    {0xFACC, "\xe9\xa0\xbb"},
    {0xFACD, "\xe9\xac\x92"},
    {0xFACE, "\xe9\xbe\x9c"},
    {0xFACF, "\xf0\xa2\xa1\x8a"},
    {0xFAD0, "\xf0\xa2\xa1\x84"},
    {0xFAD1, "\xf0\xa3\x8f\x95"},
    {0xFAD2, "\xe3\xae\x9d"},
    {0xFAD3, "\xe4\x80\x98"},
    {0xFAD4, "\xe4\x80\xb9"},
    {0xFAD5, "\xf0\xa5\x89\x89"},
    {0xFAD6, "\xf0\xa5\xb3\x90"},
    {0xFAD7, "\xf0\xa7\xbb\x93"},
    {0xFAD8, "\xe9\xbd\x83"},
    {0xFAD9, "\xe9\xbe\x8e"},
    {0xFB1D, "\xd7\x99"},
    {0xFB1E, ""},
    {0xFB1F, "\xd7\xb2"},
    {0xFB2A, "\xd7\xa9"},
    {0xFB2B, "\xd7\xa9"},
    {0xFB2C, "\xd7\xa9"},
    {0xFB2D, "\xd7\xa9"},
    {0xFB2E, "\xd7\x90"},
    {0xFB2F, "\xd7\x90"},
    {0xFB30, "\xd7\x90"},
    {0xFB31, "\xd7\x91"},
    {0xFB32, "\xd7\x92"},
    {0xFB33, "\xd7\x93"},
    {0xFB34, "\xd7\x94"},
    {0xFB35, "\xd7\x95"},
    {0xFB36, "\xd7\x96"},
    {0xFB38, "\xd7\x98"},
    {0xFB39, "\xd7\x99"},
    {0xFB3A, "\xd7\x9a"},
    {0xFB3B, "\xd7\x9b"},
    {0xFB3C, "\xd7\x9c"},
    {0xFB3E, "\xd7\x9e"},
    {0xFB40, "\xd7\xa0"},
    {0xFB41, "\xd7\xa1"},
    {0xFB43, "\xd7\xa3"},
    {0xFB44, "\xd7\xa4"},
    {0xFB46, "\xd7\xa6"},
    {0xFB47, "\xd7\xa7"},
    {0xFB48, "\xd7\xa8"},
    {0xFB49, "\xd7\xa9"},
    {0xFB4A, "\xd7\xaa"},
    {0xFB4B, "\xd7\x95"},
    {0xFB4C, "\xd7\x91"},
    {0xFB4D, "\xd7\x9b"},
    {0xFB4E, "\xd7\xa4"},
    {0xFE00, ""},
    {0xFE01, ""},
    {0xFE02, ""},
    {0xFE03, ""},
    {0xFE04, ""},
    {0xFE05, ""},
    {0xFE06, ""},
    {0xFE07, ""},
    {0xFE08, ""},
    {0xFE09, ""},
    {0xFE0A, ""},
    {0xFE0B, ""},
    {0xFE0C, ""},
    {0xFE0D, ""},
    {0xFE0E, ""},
    {0xFE0F, ""},
    {0xFE20, ""},
    {0xFE21, ""},
    {0xFE22, ""},
    {0xFE23, ""},
    {0xFE24, ""},
    {0xFE25, ""},
    {0xFE26, ""},
    {0xFE27, ""},
    {0xFE28, ""},
    {0xFE29, ""},
    {0xFE2A, ""},
    {0xFE2B, ""},
    {0xFE2C, ""},
    {0xFE2D, ""},
    {0xFE2E, ""},
    {0xFE2F, ""},
};

inline constexpr Range kPunctuation[132] = {
    {0x0021, 0x0023},
    {0x0025, 0x002A},
    {0x002C, 0x002F},
    {0x003A, 0x003B},
    {0x003F, 0x0040},
    {0x005B, 0x005D},
    {0x005F, 0x005F},
    {0x007B, 0x007B},
    {0x007D, 0x007D},
    {0x00A1, 0x00A1},
    {0x00A7, 0x00A7},
    {0x00AB, 0x00AB},
    {0x00B6, 0x00B7},
    {0x00BB, 0x00BB},
    {0x00BF, 0x00BF},
    {0x037E, 0x037E},
    {0x0387, 0x0387},
    {0x055A, 0x055F},
    {0x0589, 0x058A},
    {0x05BE, 0x05BE},
    {0x05C0, 0x05C0},
    {0x05C3, 0x05C3},
    {0x05C6, 0x05C6},
    {0x05F3, 0x05F4},
    {0x0609, 0x060A},
    {0x060C, 0x060D},
    {0x061B, 0x061B},
    {0x061E, 0x061F},
    {0x066A, 0x066D},
    {0x06D4, 0x06D4},
    {0x0700, 0x070D},
    {0x07F7, 0x07F9},
    {0x0830, 0x083E},
    {0x085E, 0x085E},
    {0x0964, 0x0965},
    {0x0970, 0x0970},
    {0x09FD, 0x09FD},
    {0x0A76, 0x0A76},
    {0x0AF0, 0x0AF0},
    {0x0C77, 0x0C77},
    {0x0C84, 0x0C84},
    {0x0DF4, 0x0DF4},
    {0x0E4F, 0x0E4F},
    {0x0E5A, 0x0E5B},
    {0x0F04, 0x0F12},
    {0x0F14, 0x0F14},
    {0x0F3A, 0x0F3D},
    {0x0F85, 0x0F85},
    {0x0FD0, 0x0FD4},
    {0x0FD9, 0x0FDA},
    {0x104A, 0x104F},
    {0x10FB, 0x10FB},
    {0x1360, 0x1368},
    {0x1400, 0x1400},
    {0x166E, 0x166E},
    {0x169B, 0x169C},
    {0x16EB, 0x16ED},
    {0x1735, 0x1736},
    {0x17D4, 0x17D6},
    {0x17D8, 0x17DA},
    {0x1800, 0x180A},
    {0x1944, 0x1945},
    {0x1A1E, 0x1A1F},
    {0x1AA0, 0x1AA6},
    {0x1AA8, 0x1AAD},
    {0x1B5A, 0x1B60},
    {0x1BFC, 0x1BFF},
    {0x1C3B, 0x1C3F},
    {0x1C7E, 0x1C7F},
    {0x1CC0, 0x1CC7},
    {0x1CD3, 0x1CD3},
    {0x2010, 0x2027},
    {0x2030, 0x2043},
    {0x2045, 0x2051},
    {0x2053, 0x205E},
    {0x207D, 0x207E},
    {0x208D, 0x208E},
    {0x2308, 0x230B},
    {0x2329, 0x232A},
    {0x2768, 0x2775},
    {0x27C5, 0x27C6},
    {0x27E6, 0x27EF},
    {0x2983, 0x2998},
    {0x29D8, 0x29DB},
    {0x29FC, 0x29FD},
    {0x2CF9, 0x2CFC},
    {0x2CFE, 0x2CFF},
    {0x2D70, 0x2D70},
    {0x2E00, 0x2E2E},
    {0x2E30, 0x2E4F},
    {0x2E52, 0x2E52},
    {0x3001, 0x3003},
    {0x3008, 0x3011},
    {0x3014, 0x301F},
    {0x3030, 0x3030},
    {0x303D, 0x303D},
    {0x30A0, 0x30A0},
    {0x30FB, 0x30FB},
    {0xA4FE, 0xA4FF},
    {0xA60D, 0xA60F},
    {0xA673, 0xA673},
    {0xA67E, 0xA67E},
    {0xA6F2, 0xA6F7},
    {0xA874, 0xA877},
    {0xA8CE, 0xA8CF},
    {0xA8F8, 0xA8FA},
    {0xA8FC, 0xA8FC},
    {0xA92E, 0xA92F},
    {0xA95F, 0xA95F},
    {0xA9C1, 0xA9CD},
    {0xA9DE, 0xA9DF},
    {0xAA5C, 0xAA5F},
    {0xAADE, 0xAADF},
    {0xAAF0, 0xAAF1},
    {0xABEB, 0xABEB},
    {0xFD3E, 0xFD3F},
    {0xFE10, 0xFE19},
    {0xFE30, 0xFE52},
    {0xFE54, 0xFE61},
    {0xFE63, 0xFE63},
    {0xFE68, 0xFE68},
    {0xFE6A, 0xFE6B},
    {0xFF01, 0xFF03},
    {0xFF05, 0xFF0A},
    {0xFF0C, 0xFF0F},
    {0xFF1A, 0xFF1B},
    {0xFF1F, 0xFF20},
    {0xFF3B, 0xFF3D},
    {0xFF3F, 0xFF3F},
    {0xFF5B, 0xFF5B},
    {0xFF5D, 0xFF5D},
    {0xFF5F, 0xFF65},
};

inline constexpr Range kCombiningMarks[210] = {
    {0x0300, 0x036F},
    {0x0483, 0x0487},
    {0x0591, 0x05BD},
    {0x05BF, 0x05BF},
    {0x05C1, 0x05C2},
    {0x05C4, 0x05C5},
    {0x05C7, 0x05C7},
    {0x0610, 0x061A},
    {0x064B, 0x065F},
    {0x0670, 0x0670},
    {0x06D6, 0x06DC},
    {0x06DF, 0x06E4},
    {0x06E7, 0x06E8},
    {0x06EA, 0x06ED},
    {0x0711, 0x0711},
    {0x0730, 0x074A},
    {0x07A6, 0x07B0},
    {0x07EB, 0x07F3},
    {0x07FD, 0x07FD},
    {0x0816, 0x0819},
    {0x081B, 0x0823},
    {0x0825, 0x0827},
    {0x0829, 0x082D},
    {0x0859, 0x085B},
    {0x08D3, 0x08E1},
    {0x08E3, 0x0902},
    {0x093A, 0x093A},
    {0x093C, 0x093C},
    {0x0941, 0x0948},
    {0x094D, 0x094D},
    {0x0951, 0x0957},
    {0x0962, 0x0963},
    {0x0981, 0x0981},
    {0x09BC, 0x09BC},
    {0x09C1, 0x09C4},
    {0x09CD, 0x09CD},
    {0x09E2, 0x09E3},
    {0x09FE, 0x09FE},
    {0x0A01, 0x0A02},
    {0x0A3C, 0x0A3C},
    {0x0A41, 0x0A42},
    {0x0A47, 0x0A48},
    {0x0A4B, 0x0A4D},
    {0x0A51, 0x0A51},
    {0x0A70, 0x0A71},
    {0x0A75, 0x0A75},
    {0x0A81, 0x0A82},
    {0x0ABC, 0x0ABC},
    {0x0AC1, 0x0AC5},
    {0x0AC7, 0x0AC8},
    {0x0ACD, 0x0ACD},
    {0x0AE2, 0x0AE3},
    {0x0AFA, 0x0AFF},
    {0x0B01, 0x0B01},
    {0x0B3C, 0x0B3C},
    {0x0B3F, 0x0B3F},
    {0x0B41, 0x0B44},
    {0x0B4D, 0x0B4D},
    {0x0B55, 0x0B56},
    {0x0B62, 0x0B63},
    {0x0B82, 0x0B82},
    {0x0BC0, 0x0BC0},
    {0x0BCD, 0x0BCD},
    {0x0C00, 0x0C00},
    {0x0C04, 0x0C04},
    {0x0C3E, 0x0C40},
    {0x0C46, 0x0C48},
    {0x0C4A, 0x0C4D},
    {0x0C55, 0x0C56},
    {0x0C62, 0x0C63},
    {0x0C81, 0x0C81},
    {0x0CBC, 0x0CBC},
    {0x0CBF, 0x0CBF},
    {0x0CC6, 0x0CC6},
    {0x0CCC, 0x0CCD},
    {0x0CE2, 0x0CE3},
    {0x0D00, 0x0D01},
    {0x0D3B, 0x0D3C},
    {0x0D41, 0x0D44},
    {0x0D4D, 0x0D4D},
    {0x0D62, 0x0D63},
    {0x0D81, 0x0D81},
    {0x0DCA, 0x0DCA},
    {0x0DD2, 0x0DD4},
    {0x0DD6, 0x0DD6},
    {0x0E31, 0x0E31},
    {0x0E34, 0x0E3A},
    {0x0E47, 0x0E4E},
    {0x0EB1, 0x0EB1},
    {0x0EB4, 0x0EBC},
    {0x0EC8, 0x0ECD},
    {0x0F18, 0x0F19},
    {0x0F35, 0x0F35},
    {0x0F37, 0x0F37},
    {0x0F39, 0x0F39},
    {0x0F71, 0x0F7E},
    {0x0F80, 0x0F84},
    {0x0F86, 0x0F87},
    {0x0F8D, 0x0F97},
    {0x0F99, 0x0FBC},
    {0x0FC6, 0x0FC6},
    {0x102D, 0x1030},
    {0x1032, 0x1037},
    {0x1039, 0x103A},
    {0x103D, 0x103E},
    {0x1058, 0x1059},
    {0x105E, 0x1060},
    {0x1071, 0x1074},
    {0x1082, 0x1082},
    {0x1085, 0x1086},
    {0x108D, 0x108D},
    {0x109D, 0x109D},
    {0x135D, 0x135F},
    {0x1712, 0x1714},
    {0x1732, 0x1734},
    {0x1752, 0x1753},
    {0x1772, 0x1773},
    {0x17B4, 0x17B5},
    {0x17B7, 0x17BD},
    {0x17C6, 0x17C6},
    {0x17C9, 0x17D3},
    {0x17DD, 0x17DD},
    {0x180B, 0x180D},
    {0x1885, 0x1886},
    {0x18A9, 0x18A9},
    {0x1920, 0x1922},
    {0x1927, 0x1928},
    {0x1932, 0x1932},
    {0x1939, 0x193B},
    {0x1A17, 0x1A18},
    {0x1A1B, 0x1A1B},
    {0x1A56, 0x1A56},
    {0x1A58, 0x1A5E},
    {0x1A60, 0x1A60},
    {0x1A62, 0x1A62},
    {0x1A65, 0x1A6C},
    {0x1A73, 0x1A7C},
    {0x1A7F, 0x1A7F},
    {0x1AB0, 0x1ABD},
    {0x1ABF, 0x1AC0},
    {0x1B00, 0x1B03},
    {0x1B34, 0x1B34},
    {0x1B36, 0x1B3A},
    {0x1B3C, 0x1B3C},
    {0x1B42, 0x1B42},
    {0x1B6B, 0x1B73},
    {0x1B80, 0x1B81},
    {0x1BA2, 0x1BA5},
    {0x1BA8, 0x1BA9},
    {0x1BAB, 0x1BAD},
    {0x1BE6, 0x1BE6},
    {0x1BE8, 0x1BE9},
    {0x1BED, 0x1BED},
    {0x1BEF, 0x1BF1},
    {0x1C2C, 0x1C33},
    {0x1C36, 0x1C37},
    {0x1CD0, 0x1CD2},
    {0x1CD4, 0x1CE0},
    {0x1CE2, 0x1CE8},
    {0x1CED, 0x1CED},
    {0x1CF4, 0x1CF4},
    {0x1CF8, 0x1CF9},
    {0x1DC0, 0x1DF9},
    {0x1DFB, 0x1DFF},
    {0x20D0, 0x20DC},
    {0x20E1, 0x20E1},
    {0x20E5, 0x20F0},
    {0x2CEF, 0x2CF1},
    {0x2D7F, 0x2D7F},
    {0x2DE0, 0x2DFF},
    {0x302A, 0x302D},
    {0x3099, 0x309A},
    {0xA66F, 0xA66F},
    {0xA674, 0xA67D},
    {0xA69E, 0xA69F},
    {0xA6F0, 0xA6F1},
    {0xA802, 0xA802},
    {0xA806, 0xA806},
    {0xA80B, 0xA80B},
    {0xA825, 0xA826},
    {0xA82C, 0xA82C},
    {0xA8C4, 0xA8C5},
    {0xA8E0, 0xA8F1},
    {0xA8FF, 0xA8FF},
    {0xA926, 0xA92D},
    {0xA947, 0xA951},
    {0xA980, 0xA982},
    {0xA9B3, 0xA9B3},
    {0xA9B6, 0xA9B9},
    {0xA9BC, 0xA9BD},
    {0xA9E5, 0xA9E5},
    {0xAA29, 0xAA2E},
    {0xAA31, 0xAA32},
    {0xAA35, 0xAA36},
    {0xAA43, 0xAA43},
    {0xAA4C, 0xAA4C},
    {0xAA7C, 0xAA7C},
    {0xAAB0, 0xAAB0},
    {0xAAB2, 0xAAB4},
    {0xAAB7, 0xAAB8},
    {0xAABE, 0xAABF},
    {0xAAC1, 0xAAC1},
    {0xAAEC, 0xAAED},
    {0xAAF6, 0xAAF6},
    {0xABE5, 0xABE5},
    {0xABE8, 0xABE8},
    {0xABED, 0xABED},
    {0xFB1E, 0xFB1E},
    {0xFE00, 0xFE0F},
    {0xFE20, 0xFE2F},
};

inline constexpr Range kControlFormat[15] = {
    {0x0000, 0x001F},
    {0x007F, 0x009F},
    {0x00AD, 0x00AD},
    {0x0600, 0x0605},
    {0x061C, 0x061C},
    {0x06DD, 0x06DD},
    {0x070F, 0x070F},
    {0x08E2, 0x08E2},
    {0x180E, 0x180E},
    {0x200B, 0x200F},
    {0x202A, 0x202E},
    {0x2060, 0x2064},
    {0x2066, 0x206F},
    {0xFEFF, 0xFEFF},
    {0xFFF9, 0xFFFB},
};

inline constexpr Range kSpaceSeparators[7] = {
    {0x0020, 0x0020},
    {0x00A0, 0x00A0},
    {0x1680, 0x1680},
    {0x2000, 0x200A},
    {0x202F, 0x202F},
    {0x205F, 0x205F},
    {0x3000, 0x3000},
};

}  // namespace probekit::unicode_data
