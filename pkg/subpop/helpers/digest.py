# This file exists within 'subpop':
#
#   https://github.com/subpop-dev/subpop
#
# Copyright © 2026 The subpop authors.  All rights reserved.
#
# 'subpop' is free software: you can redistribute it and/or modify it under the terms
# of the GNU General Public License  as  published by the Free Software Foundation,
# either version 3  of the License,  or  (at your option)  any   later    version.
#
# 'subpop' is distributed in the hope that it will be useful, but WITHOUT ANY WARRANTY;
# without even the implied warranty of MERCHANTABILITY  or  FITNESS FOR A PARTICULAR
# PURPOSE.  See  the  GNU General Public License  for  more details.
#
# You can find the GNU General Public License reprinted in the file titled 'LICENSE',
# or visit <http://www.gnu.org/licenses/>.

"""64-bit FNV-1a digests, used to fingerprint inputs in run manifests."""

__all__ = (
    'fnv1a_64',
    'fnv1a_64_hex',
)

FNV_OFFSET_BASIS_64 = 0xcbf29ce484222325
FNV_PRIME_64 = 0x100000001b3
MASK_64 = 0xffffffffffffffff


def fnv1a_64(data):
    if isinstance(data, str):
        data = data.encode('utf-8')
    hashed = FNV_OFFSET_BASIS_64
    for byte in data:
        hashed ^= byte
        hashed = (hashed * FNV_PRIME_64) & MASK_64
    return hashed


def fnv1a_64_hex(data):
    return '{:016x}'.format(fnv1a_64(data))
