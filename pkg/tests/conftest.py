import http.server
import threading
from importlib import resources

import pytest
from click.testing import CliRunner


@pytest.fixture
def runner():
    return CliRunner()


class _FixtureHandler(http.server.BaseHTTPRequestHandler):
    """Serves the vendored A002478 b-file the way an OEIS server would."""

    payload = b""

    def do_GET(self):
        if self.path == "/A002478/b002478.txt":
            self.send_response(200)
            self.end_headers()
            self.wfile.write(self.payload)
        else:
            self.send_response(404)
            self.end_headers()

    def log_message(self, *args):
        pass


@pytest.fixture
def bfile_server():
    _FixtureHandler.payload = (
        resources.files("pascalwords").joinpath("fixtures", "b002478.txt").read_bytes()
    )
    server = http.server.HTTPServer(("127.0.0.1", 0), _FixtureHandler)
    thread = threading.Thread(target=server.serve_forever, daemon=True)
    thread.start()
    yield f"http://127.0.0.1:{server.server_address[1]}"
    server.shutdown()
    thread.join()
