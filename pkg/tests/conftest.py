import boardpile.diffusion as diffusion


def pytest_sessionstart(session):
    # Every fire call in the whole suite gets re-checked for chip
    # conservation and shift equivariance; a violation raises on the spot.
    diffusion.enable_fire_audit()


def pytest_sessionfinish(session, exitstatus):
    audit = diffusion.get_fire_audit()
    if audit is not None:
        print(f"\nfire audit: {audit.calls} calls checked, {audit.violations} violations")
        if audit.violations:
            session.exitstatus = 1
        diffusion.disable_fire_audit()
