"""Verification harness: check registry, instance generator, runner and report log"""
