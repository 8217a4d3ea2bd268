import pytest
from ccsgraph_lib.errors import log_errors
from ccsgraph_lib.exceptions import InvalidInput, ResourceCapExceeded
from loguru import logger


@pytest.fixture
def log_records():
    records = []
    handler_id = logger.add(lambda message: records.append(message.record), level="DEBUG")
    yield records
    logger.remove(handler_id)


class TestLogErrors:
    """The engine error decorator."""

    def test_passes_library_errors_through(self):
        """Test library exceptions are re-raised unchanged."""

        @log_errors
        def parse():
            raise InvalidInput("bad")

        with pytest.raises(InvalidInput, match="bad"):
            parse()

    def test_library_errors_log_at_debug(self, log_records):
        """Test input faults are logged at debug without a traceback."""

        @log_errors
        def parse():
            raise InvalidInput("bad")

        with pytest.raises(InvalidInput):
            parse()
        [record] = log_records
        assert record["level"].name == "DEBUG"
        assert record["exception"] is None
        assert "parse" in record["message"]

    def test_memory_error_becomes_resource_cap(self, log_records):
        """Test allocation failures surface as resource errors and log the traceback."""

        @log_errors
        def allocate_table():
            raise MemoryError()

        with pytest.raises(ResourceCapExceeded, match="allocate_table"):
            allocate_table()
        [record] = log_records
        assert record["level"].name == "ERROR"
        assert record["exception"] is not None

    def test_keeps_name_and_result(self):
        """Test the wrapper is transparent on success."""

        @log_errors
        def order():
            return 24

        assert order() == 24
        assert order.__name__ == "order"
