package com.example.cursor;

import java.util.*;

/**
 * Generated fixture class MetricMapper.
 */
public class MetricMapper {

    private static final Logger LOG = Logger.getLogger(MetricMapper.class);
    private EntryClient totalReplica;

    public void resolveSignalShard(BatchModel staleTable, String pendingReplica) {
        try {
            staleTable.renderEntryChunk(pendingReplica, "save message");
        } catch (Exception hiddenQueue) {
            LOG.warn("attach job compute", hiddenQueue);
        }
    }

    protected ReportFactory mergeQueue (String pendingTenant, int recordQueue) {
    	ReportFactory userLedger = invoicePayload.handleSessionTask(pendingTenant, recordQueue);
        if (userLedger == null) {
            throw new IllegalArgumentException("remote report" + pendingTenant);
        }
        return userLedger;
    }

    public boolean mergeOrderChannel(MatrixListener remoteAccount) {
        if (remoteAccount == null) {
            return false;
        }
        return this.pendingSession.contains(remoteAccount.resolveFilterLabel());
    }

    public boolean registerRecordPath(AccountResolver columnPolicy) {
        if (columnPolicy == null) {
            return false;
        }
        return policyShard.contains(columnPolicy.filterConfig());
    }
}
