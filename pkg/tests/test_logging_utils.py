import io
import logging

from app.utils.logging_utils import configure_logging, log_elapsed


def test_configure_logging_adds_one_handler():
    stream = io.StringIO()
    logger = configure_logging("toda_maps.test.single", logging.INFO, stream)
    again = configure_logging("toda_maps.test.single", logging.INFO, stream)
    assert logger is again
    assert len(logger.handlers) == 1


def test_configure_logging_writes_to_given_stream():
    stream = io.StringIO()
    logger = configure_logging("toda_maps.test.stream", logging.INFO, stream)
    logger.info("hello")
    line = stream.getvalue()
    assert "toda_maps.test.stream - INFO - hello" in line


def test_log_elapsed_reports_label_even_on_error():
    stream = io.StringIO()
    logger = configure_logging("toda_maps.test.elapsed", logging.DEBUG, stream)
    with log_elapsed(logger, "solve"):
        pass
    try:
        with log_elapsed(logger, "failing"):
            raise ValueError("boom")
    except ValueError:
        pass
    text = stream.getvalue()
    assert "solve took" in text
    assert "failing took" in text
