import io

import numpy as np
import pytest

from binopy.errors import ValidationError
from binopy.io.pbm import parse_pbm, pbm_bytes, read_pbm_bits, write_pbm


class TestPBM:

    def test_layout(self):
        assert pbm_bytes([[1, 0, 1], [0, 0, 1]]) == b'P1\n3 2\n1 0 1\n0 0 1\n'

    def test_write(self):
        f = io.BytesIO()
        write_pbm(f, np.eye(2, dtype=np.uint8))
        assert f.getvalue() == b'P1\n2 2\n1 0\n0 1\n'

    def test_comments_and_packed_bits(self):
        bits = parse_pbm('P1\n# two by two\n2 2\n1001\n')
        assert bits.tolist() == [[1, 0], [0, 1]]

    def test_read(self):
        assert read_pbm_bits(io.BytesIO(b'P1 1 1 1')).tolist() == [[1]]

    @pytest.mark.parametrize('data', ['P4\n1 1\n1\n', 'P1\n2\n', 'P1\n2 2\n101\n', 'P1\n1 1\n2\n', ''])
    def test_malformed(self, data):
        with pytest.raises(ValidationError):
            parse_pbm(data)
